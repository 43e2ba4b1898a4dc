#ifndef MAXKCUT_EXACT_HPP
#define MAXKCUT_EXACT_HPP

#include "maxkcut/formulations.hpp"
#include "maxkcut/graph.hpp"

namespace maxkcut {

struct ExactResult {
    double value;
    Partitioning partitioning;
    bool proved; // false when the time cap stopped the search
    double upper_bound; // equals value when proved
    long long nodes;
};

constexpr long long kBruteForcePointCap = 100'000'000;

/// Exhaustive enumeration with vertex 0 pinned to partition 0. Requires
/// k^(n-1) <= the point cap. Returns the lexicographically smallest optimal
/// assignment.
ExactResult brute_force_opt(const Graph& g, int k,
                            long long point_cap = kBruteForcePointCap);

/// DFS over vertices in descending weighted-degree order. Partition labels
/// are canonicalized (the vertex at depth d may use at most min(d+1, k)
/// labels) and nodes are pruned with current cut + remaining positive
/// weight. When the time cap fires, the best incumbent is returned together
/// with a still-valid global upper bound.
ExactResult branch_and_bound_opt(const Graph& g, int k, double time_cap_seconds = 60.0);

} // namespace maxkcut

#endif
