#include "maxkcut/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <random>
#include <set>
#include <sstream>

#include "maxkcut/errors.hpp"

namespace maxkcut {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1)
        throw Error(ErrorKind::BadParams, "graph needs at least one vertex");
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v)
            throw Error(ErrorKind::BadParams,
                        "self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n_)
            throw Error(ErrorKind::VertexOutOfRange,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") outside [0," + std::to_string(n_) + ")");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
            throw Error(ErrorKind::DuplicateEdge,
                        "duplicate edge (" + std::to_string(edges_[i].u) + "," +
                            std::to_string(edges_[i].v) + ")");
    adj_.resize(n_);
    for (const auto& e : edges_) {
        adj_[e.u].emplace_back(e.v, e.w);
        adj_[e.v].emplace_back(e.u, e.w);
    }
}

double Graph::total_weight() const {
    double s = 0.0;
    for (const auto& e : edges_) s += e.w;
    return s;
}

double Graph::positive_weight() const {
    double s = 0.0;
    for (const auto& e : edges_) s += std::max(e.w, 0.0);
    return s;
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(u, v),
                               [](const Edge& e, const std::pair<int, int>& p) {
                                   return std::pair(e.u, e.v) < p;
                               });
    return it != edges_.end() && it->u == u && it->v == v;
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#' || c == 'c';
    }
    return true; // blank
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    long long m = -1;
    long long line_no = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 1 || m < 0)
                throw Error(ErrorKind::MalformedLine,
                            "line " + std::to_string(line_no) + ": expected \"n m\" header");
            std::string rest;
            if (ls >> rest)
                throw Error(ErrorKind::MalformedLine,
                            "line " + std::to_string(line_no) + ": trailing tokens after header");
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }
        int u, v;
        double w;
        if (!(ls >> u >> v >> w))
            throw Error(ErrorKind::MalformedLine,
                        "line " + std::to_string(line_no) + ": expected \"u v w\"");
        std::string rest;
        if (ls >> rest)
            throw Error(ErrorKind::MalformedLine,
                        "line " + std::to_string(line_no) + ": trailing tokens after edge");
        if (u < 1 || u > n || v < 1 || v > n)
            throw Error(ErrorKind::VertexOutOfRange,
                        "line " + std::to_string(line_no) + ": vertex id outside 1.." +
                            std::to_string(n));
        if (u == v)
            throw Error(ErrorKind::MalformedLine,
                        "line " + std::to_string(line_no) + ": self-loop");
        edges.push_back({u - 1, v - 1, w});
    }
    if (n < 0)
        throw Error(ErrorKind::MalformedLine, "empty input, no \"n m\" header");
    if (static_cast<long long>(edges.size()) != m)
        throw Error(ErrorKind::MalformedLine,
                    "header announced " + std::to_string(m) + " edges, found " +
                        std::to_string(edges.size()));
    // the Graph constructor reports duplicates after u<v normalization
    return Graph(n, std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

namespace {

std::string fmt_weight(double w) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", w);
    return buf;
}

} // namespace

std::string render_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& e : g.edges())
        out << e.u + 1 << ' ' << e.v + 1 << ' ' << fmt_weight(e.w) << '\n';
    return out.str();
}

GraphStats graph_stats(const Graph& g) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    double density = 0.0;
    if (n > 1) density = 100.0 * m / (0.5 * n * (n - 1));
    return {n, m, density};
}

namespace {

// 53-bit uniform in [0,1); mt19937_64 raw output is pinned by the standard,
// so generated instances are identical everywhere.
double u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
    if (lo == hi) return lo;
    return lo + u01(rng) * (hi - lo);
}

} // namespace

Graph gen_instance(InstanceKind kind, const InstanceParams& params, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    switch (kind) {
        case InstanceKind::Random: {
            if (params.n < 1 || params.p <= 0.0 || params.p > 1.0 ||
                params.wmin > params.wmax)
                throw Error(ErrorKind::BadParams, "random: need n >= 1, p in (0,1], wmin <= wmax");
            for (int u = 0; u < params.n; ++u)
                for (int v = u + 1; v < params.n; ++v) {
                    const double toss = u01(rng);
                    const double w = uniform_in(rng, params.wmin, params.wmax);
                    if (toss < params.p) edges.push_back({u, v, w});
                }
            return Graph(params.n, std::move(edges));
        }
        case InstanceKind::Band: {
            if (params.n < 1 || params.bandwidth < 1)
                throw Error(ErrorKind::BadParams, "band: need n >= 1, bandwidth >= 1");
            for (int u = 0; u < params.n; ++u)
                for (int v = u + 1; v < params.n && v - u <= params.bandwidth; ++v)
                    edges.push_back({u, v, 1.0});
            return Graph(params.n, std::move(edges));
        }
        case InstanceKind::Spinglass: {
            const int L = params.grid_side;
            if (L < 2)
                throw Error(ErrorKind::BadParams, "spinglass: need grid side >= 2");
            auto id = [L](int i, int j) { return i * L + j; };
            std::set<std::pair<int, int>> seen;
            for (int i = 0; i < L; ++i)
                for (int j = 0; j < L; ++j)
                    for (auto [ni, nj] : {std::pair{i, (j + 1) % L}, std::pair{(i + 1) % L, j}}) {
                        int u = id(i, j), v = id(ni, nj);
                        if (u > v) std::swap(u, v);
                        const double w = u01(rng) < 0.5 ? -1.0 : 1.0;
                        if (seen.insert({u, v}).second) // L == 2 wraps onto itself
                            edges.push_back({u, v, w});
                    }
            return Graph(L * L, std::move(edges));
        }
    }
    throw Error(ErrorKind::BadParams, "unknown instance kind");
}

} // namespace maxkcut
