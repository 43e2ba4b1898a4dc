#include "maxkcut/formulations.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "maxkcut/errors.hpp"

namespace maxkcut {

namespace {

void require_k(int k) {
    if (k < 2) throw Error(ErrorKind::BadK, "k must be >= 2, got " + std::to_string(k));
}

std::string nm(const std::string& base, int a, int b) {
    return base + '_' + std::to_string(a) + '_' + std::to_string(b);
}

} // namespace

double cut_value(const Graph& g, const Partitioning& p) {
    if (static_cast<int>(p.assignment.size()) != g.num_vertices())
        throw Error(ErrorKind::LengthMismatch, "assignment length != vertex count");
    double total = 0.0;
    for (const auto& e : g.edges())
        if (p.assignment[e.u] != p.assignment[e.v]) total += e.w;
    return total;
}

int pair_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

int num_pairs(int n) { return n * (n - 1) / 2; }

Model build_bqo(const Graph& g, int k) {
    require_k(k);
    const int n = g.num_vertices();
    Model m;
    m.name = "bqo_k" + std::to_string(k);
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < k; ++j) m.add_variable(nm("x", v, j), 0.0, 1.0, true);
    auto x = [k](int v, int j) { return v * k + j; };

    m.objective_constant = g.total_weight();
    for (const auto& e : g.edges())
        for (int j = 0; j < k; ++j)
            m.add_quadratic_objective(x(e.u, j), x(e.v, j), -e.w);

    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<int, double>> terms;
        for (int j = 0; j < k; ++j) terms.emplace_back(x(v, j), 1.0);
        m.add_constraint("assign_" + std::to_string(v), std::move(terms), Relation::Equal, 1.0);
    }
    return m;
}

Model build_vmilo(const Graph& g, int k) {
    require_k(k);
    const int n = g.num_vertices();
    Model m;
    m.name = "vmilo_k" + std::to_string(k);
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < k; ++j) m.add_variable(nm("x", v, j), 0.0, 1.0, true);
    auto x = [k](int v, int j) { return v * k + j; };
    std::vector<int> y(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edges()[e];
        y[e] = m.add_variable(nm("y", ed.u, ed.v), 0.0, 1.0, true);
        m.add_linear_objective(y[e], ed.w);
    }

    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<int, double>> terms;
        for (int j = 0; j < k; ++j) terms.emplace_back(x(v, j), 1.0);
        m.add_constraint("assign_" + std::to_string(v), std::move(terms), Relation::Equal, 1.0);
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edges()[e];
        const std::string tag = std::to_string(ed.u) + '_' + std::to_string(ed.v);
        for (int j = 0; j < k; ++j) {
            const std::string jt = tag + '_' + std::to_string(j);
            m.add_constraint("cutlb1_" + jt,
                             {{x(ed.u, j), 1.0}, {x(ed.v, j), -1.0}, {y[e], -1.0}},
                             Relation::LessEq, 0.0);
            m.add_constraint("cutlb2_" + jt,
                             {{x(ed.v, j), 1.0}, {x(ed.u, j), -1.0}, {y[e], -1.0}},
                             Relation::LessEq, 0.0);
            m.add_constraint("samepart_" + jt,
                             {{x(ed.u, j), 1.0}, {x(ed.v, j), 1.0}, {y[e], 1.0}},
                             Relation::LessEq, 2.0);
        }
    }
    return m;
}

namespace {

long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > (1LL << 60)) return acc; // callers only compare against caps
    }
    return acc;
}

// z_{ab} + z_{bc} <= 1 + z_{ac} and the two rotations, for a sorted triple.
void add_triangle_constraints(Model& m, const std::vector<std::vector<int>>& zidx,
                              int a, int b, int c) {
    const std::string tag =
        std::to_string(a) + '_' + std::to_string(b) + '_' + std::to_string(c);
    const int ab = zidx[a][b], bc = zidx[b][c], ac = zidx[a][c];
    m.add_constraint("tri1_" + tag, {{ab, 1.0}, {bc, 1.0}, {ac, -1.0}}, Relation::LessEq, 1.0);
    m.add_constraint("tri2_" + tag, {{ac, 1.0}, {ab, 1.0}, {bc, -1.0}}, Relation::LessEq, 1.0);
    m.add_constraint("tri3_" + tag, {{bc, 1.0}, {ac, 1.0}, {ab, -1.0}}, Relation::LessEq, 1.0);
}

void add_clique_constraint(Model& m, const std::vector<std::vector<int>>& zidx,
                           const std::vector<int>& q) {
    std::vector<std::pair<int, double>> terms;
    std::string tag = "clique";
    for (std::size_t i = 0; i < q.size(); ++i) {
        tag += '_' + std::to_string(q[i]);
        for (std::size_t j = i + 1; j < q.size(); ++j)
            terms.emplace_back(zidx[q[i]][q[j]], 1.0);
    }
    m.add_constraint(tag, std::move(terms), Relation::GreaterEq, 1.0);
}

// enumerate r-subsets of {0..n-1} in lexicographic order
template <typename F>
void for_each_subset(int n, int r, F&& fn) {
    if (r > n || r <= 0) return;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

Model build_emilo(const Graph& g, int k, bool lazy_cliques, long long upfront_cap) {
    require_k(k);
    const int n = g.num_vertices();
    if (n < 2) throw Error(ErrorKind::BadParams, "edge-based model needs n >= 2");

    Model m;
    m.name = "emilo_k" + std::to_string(k);
    std::vector<std::vector<int>> zidx(n, std::vector<int>(n, -1));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int id = m.add_variable(nm("z", u, v), 0.0, 1.0, true);
            zidx[u][v] = zidx[v][u] = id;
        }

    m.objective_constant = g.total_weight();
    for (const auto& e : g.edges()) m.add_linear_objective(zidx[e.u][e.v], -e.w);

    for_each_subset(n, 3, [&](const std::vector<int>& t) {
        add_triangle_constraints(m, zidx, t[0], t[1], t[2]);
    });

    if (!lazy_cliques) {
        if (binomial(n, k + 1) > upfront_cap)
            throw Error(ErrorKind::TooLargeUpfront,
                        "C(n,k+1) clique constraints exceed the upfront cap; use lazy mode");
        for_each_subset(n, k + 1, [&](const std::vector<int>& q) {
            add_clique_constraint(m, zidx, q);
        });
    }
    return m;
}

RemiloModel build_remilo(const Graph& g, int k) {
    require_k(k);
    const int n = g.num_vertices();

    RemiloModel rm;
    rm.chordal = chordal_extend(g);

    Model& m = rm.model;
    m.name = "remilo_k" + std::to_string(k);

    std::vector<std::pair<int, int>> ext_edges;
    for (const auto& e : g.edges()) ext_edges.emplace_back(e.u, e.v);
    for (auto fe : rm.chordal.fill_edges) ext_edges.push_back(fe);
    std::sort(ext_edges.begin(), ext_edges.end());

    std::vector<std::vector<int>> zidx(n, std::vector<int>(n, -1));
    for (auto [u, v] : ext_edges) {
        const int id = m.add_variable(nm("z", u, v), 0.0, 1.0, true);
        zidx[u][v] = zidx[v][u] = id;
    }
    rm.z_pairs = ext_edges;

    m.objective_constant = g.total_weight();
    for (const auto& e : g.edges()) m.add_linear_objective(zidx[e.u][e.v], -e.w);

    // triangles and (k+1)-subsets inside maximal cliques; overlapping cliques
    // can share them, hence the dedup sets
    std::set<std::array<int, 3>> triangles;
    std::set<std::vector<int>> cliques;
    for (const auto& mc : rm.chordal.maximal_cliques) {
        const int s = static_cast<int>(mc.size());
        for_each_subset(s, 3, [&](const std::vector<int>& t) {
            triangles.insert({mc[t[0]], mc[t[1]], mc[t[2]]});
        });
        if (s >= k + 1)
            for_each_subset(s, k + 1, [&](const std::vector<int>& q) {
                std::vector<int> sub(q.size());
                for (std::size_t i = 0; i < q.size(); ++i) sub[i] = mc[q[i]];
                cliques.insert(std::move(sub));
            });
    }
    for (const auto& t : triangles) add_triangle_constraints(m, zidx, t[0], t[1], t[2]);
    for (const auto& q : cliques) add_clique_constraint(m, zidx, q);
    return rm;
}

Model build_misdo(const Graph& g, int k, MisdoVariant variant) {
    require_k(k);
    const int n = g.num_vertices();

    Model m;
    m.name = std::string(variant == MisdoVariant::I ? "misdo1" : "misdo2") + "_k" +
             std::to_string(k);
    const double lo = variant == MisdoVariant::I ? 0.0 : -1.0 / (k - 1);
    // the two-point {lo, 1} domain of variant II is not an integer domain;
    // its box hull is what the exporters and the relaxation use
    const bool integral = variant == MisdoVariant::I;

    std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) {
            const int id = m.add_variable(nm("Z", u, v), lo, 1.0, integral);
            idx[u][v] = idx[v][u] = id;
        }

    const double scale = variant == MisdoVariant::I ? 1.0 : double(k - 1) / k;
    m.objective_constant = scale * g.total_weight();
    for (const auto& e : g.edges()) m.add_linear_objective(idx[e.u][e.v], -scale * e.w);

    for (int v = 0; v < n; ++v)
        m.add_constraint("diag_" + std::to_string(v), {{idx[v][v], 1.0}}, Relation::Equal, 1.0);

    SymMatrix constant(n);
    if (variant == MisdoVariant::I) constant.add_scaled(ones_matrix(n), -1.0); // -ee^T
    PsdBlock block(variant == MisdoVariant::I ? "kZ_minus_ones" : "Zbar",
                   std::move(constant));
    const double entry = variant == MisdoVariant::I ? static_cast<double>(k) : 1.0;
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) {
            SymMatrix coeff(n);
            coeff.at(u, v) = entry;
            block.var_coeffs.emplace_back(idx[u][v], std::move(coeff));
        }
    m.psd_blocks.push_back(std::move(block));
    return m;
}

std::vector<double> bqo_point(const Graph& g, const Partitioning& p) {
    const int n = g.num_vertices(), k = p.k;
    std::vector<double> x(static_cast<std::size_t>(n) * k, 0.0);
    for (int v = 0; v < n; ++v) x[static_cast<std::size_t>(v) * k + p.assignment[v]] = 1.0;
    return x;
}

std::vector<double> vmilo_point(const Graph& g, const Partitioning& p) {
    std::vector<double> pt = bqo_point(g, p);
    for (const auto& e : g.edges())
        pt.push_back(p.assignment[e.u] != p.assignment[e.v] ? 1.0 : 0.0);
    return pt;
}

std::vector<double> emilo_point(const Graph& g, const Partitioning& p) {
    const int n = g.num_vertices();
    std::vector<double> z(num_pairs(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            z[pair_index(n, u, v)] = p.assignment[u] == p.assignment[v] ? 1.0 : 0.0;
    return z;
}

std::vector<double> remilo_point(const RemiloModel& rm, const Partitioning& p) {
    std::vector<double> z;
    z.reserve(rm.z_pairs.size());
    for (auto [u, v] : rm.z_pairs)
        z.push_back(p.assignment[u] == p.assignment[v] ? 1.0 : 0.0);
    return z;
}

std::vector<double> misdo_point(const Graph& g, const Partitioning& p, MisdoVariant variant) {
    const int n = g.num_vertices();
    const double lo = variant == MisdoVariant::I ? 0.0 : -1.0 / (p.k - 1);
    std::vector<double> pt;
    pt.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v)
            pt.push_back(p.assignment[u] == p.assignment[v] ? 1.0 : lo);
    return pt;
}

} // namespace maxkcut
