#ifndef MAXKCUT_ROWGEN_HPP
#define MAXKCUT_ROWGEN_HPP

#include <vector>

#include "maxkcut/simplex.hpp"

namespace maxkcut {

enum class SeparationMode { Exact, Greedy };

/// A (k+1)-subset whose pairwise z mass falls short of one.
struct CliqueCut {
    std::vector<int> vertices; // sorted
    double pair_sum;
};

constexpr double kCutViolationTol = 1e-7;

/// Finds (k+1)-subsets Q of {0..n-1} with sum_{pairs of Q} z < 1 - tol,
/// most violated (smallest sum) first, at most max_cuts of them. z is
/// pair-indexed (see pair_index). Exact mode enumerates with partial-sum
/// pruning; greedy grows one candidate from every seed vertex by repeatedly
/// adding the vertex of least added pair mass.
std::vector<CliqueCut> separate_clique_cuts(const std::vector<double>& z, int n, int k,
                                            SeparationMode mode, int max_cuts,
                                            double tol = kCutViolationTol);

struct RowgenResult {
    LpSolution solution;
    int rounds = 0;           // rounds that actually added cuts
    long long cuts_added = 0;
    bool converged = false;   // false when cap_rows stopped the loop
    std::vector<double> round_objectives; // objective after each solve
};

constexpr long long kDefaultRowCap = 200'000;
constexpr int kDefaultCutsPerRound = 200;

/// Lazy clique separation around the simplex solver: solve, separate, append
/// the most violated rows, dual-resolve, repeat. The base problem must hold
/// the triangle rows and no clique rows, with its first C(n,2) variables the
/// pair-indexed z's; the returned objective is then a valid upper bound even
/// when the row cap stops the loop early. Exact separation is used while
/// C(n,k+1) stays enumerable, greedy beyond that.
RowgenResult solve_relaxation_rowgen(const LpProblem& base, int n, int k,
                                     long long cap_rows = kDefaultRowCap,
                                     int max_cuts_per_round = kDefaultCutsPerRound);

} // namespace maxkcut

#endif
