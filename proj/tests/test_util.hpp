#ifndef MAXKCUT_TESTS_UTIL_HPP
#define MAXKCUT_TESTS_UTIL_HPP

#include <vector>

#include "maxkcut/graph.hpp"

namespace maxkcut::testutil {

inline Graph complete(int n, double w = 1.0) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v, w});
    return Graph(n, std::move(e));
}

inline Graph cycle(int n, double w = 1.0) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, w});
    return Graph(n, std::move(e));
}

inline Graph path(int n, double w = 1.0) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, w});
    return Graph(n, std::move(e));
}

inline Graph edgeless(int n) { return Graph(n, {}); }

inline Graph single_edge(double w) { return Graph(2, {{0, 1, w}}); }

/// Small seeded corpus with mixed signs, for relational properties.
inline std::vector<Graph> random_corpus(int count, int nmin, int nmax, std::uint64_t seed,
                                        bool mixed_signs = true) {
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        InstanceParams params;
        params.n = nmin + static_cast<int>((seed + i * 7919) % (nmax - nmin + 1));
        params.p = 0.3 + 0.6 * ((i * 31 % 10) / 10.0);
        params.wmin = mixed_signs ? -2.0 : 0.5;
        params.wmax = 3.0;
        out.push_back(gen_instance(InstanceKind::Random, params, seed + i));
    }
    return out;
}

} // namespace maxkcut::testutil

#endif
