#ifndef MAXKCUT_GRAPH_HPP
#define MAXKCUT_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace maxkcut {

/// Weighted undirected simple graph. Vertices are 0..n-1, every edge is
/// stored once with u < v. Immutable after construction; safe to share
/// across threads.
struct Edge {
    int u;
    int v;
    double w;

    friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
public:
    /// Builds a graph from an edge list. Edges are normalized to u < v and
    /// sorted lexicographically. Throws on self-loops, duplicates, or ids
    /// outside [0, n).
    Graph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Total edge weight.
    double total_weight() const;
    /// Sum of max(w, 0) over edges.
    double positive_weight() const;

    /// Adjacency as (neighbor, weight) lists, built on construction.
    const std::vector<std::pair<int, double>>& neighbors(int v) const {
        return adj_[v];
    }

    bool has_edge(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, double>>> adj_;
};

/// Parses the 1-based "n m" / "u v w" edge-list format. Lines starting with
/// '#' or 'c' are comments.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

/// Writes the same format back, 1-based ids, weights with up to 17
/// significant digits so parse(render(g)) == g.
std::string render_edge_list(const Graph& g);

struct GraphStats {
    int n;
    int m;
    double density_percent; // 100 * m / C(n,2); 0 for n == 1
};

GraphStats graph_stats(const Graph& g);

enum class InstanceKind { Random, Band, Spinglass };

/// Generator parameters. Only the fields relevant to the chosen kind are
/// read: random uses (n, p, wmin, wmax), band uses (n, bandwidth),
/// spinglass uses grid_side.
struct InstanceParams {
    int n = 0;
    double p = 0.5;
    double wmin = 1.0;
    double wmax = 1.0;
    int bandwidth = 1;
    int grid_side = 2;
};

/// Deterministic instance generator: identical (kind, params, seed) yields an
/// identical edge list on every platform.
Graph gen_instance(InstanceKind kind, const InstanceParams& params, std::uint64_t seed);

} // namespace maxkcut

#endif
