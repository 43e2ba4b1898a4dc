#ifndef MAXKCUT_RELAXATIONS_HPP
#define MAXKCUT_RELAXATIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "maxkcut/graph.hpp"
#include "maxkcut/polytopes.hpp"
#include "maxkcut/rowgen.hpp"
#include "maxkcut/simplex.hpp"

namespace maxkcut {

/// Closed form for the vertex-model relaxation optimum: sum of positive
/// edge weights.
double vmilo_relax_bound(const Graph& g);

/// The same value obtained the long way, by simplex on the relaxed model
/// (cross-check path).
double vmilo_relax_bound_lp(const Graph& g, int k);

struct RelaxBound {
    double value = 0.0;
    LpStatus status = LpStatus::IterationLimit;
    bool converged = false;
    int rounds = 0; // separation rounds that added cuts (lazy path only)
};

RelaxBound emilo_relax_bound(const Graph& g, int k, bool lazy = false);
RelaxBound remilo_relax_bound(const Graph& g, int k);

/// Objective of the quadratic model at a fractional point:
/// sum_e w_e (1 - x_u . x_v).
double bqo_objective(const Graph& g, const FractionalAssignment& x);

/// One rounding sweep: vertices in id order, each row's mass moved to a
/// partition of maximal marginal gain (ties to the smallest index). The
/// resulting integral objective never drops below the fractional one.
Partitioning round_fractional(const Graph& g, int k, const FractionalAssignment& x);

struct BqoBudget {
    long long brute_point_cap = 1'000'000;
    double bnb_time_cap_seconds = 10.0;
    int multistarts = 32;
    std::uint64_t seed = 1;
};

/// The quadratic relaxation optimum equals the combinatorial optimum, so
/// whenever the exact search fits the budget the bound is exact. Otherwise
/// the result is an honest bracket: best rounded multistart value below,
/// search upper bound above.
struct BqoBound {
    bool exact;
    double value; // meaningful when exact
    double lower;
    double upper;
};
BqoBound bqo_relax_bound(const Graph& g, int k, const BqoBudget& budget = {});

/// Per-instance outcome of one bounding method.
struct MethodResult {
    std::string method;
    bool has_bound = false;
    double bound = 0.0;
    bool has_scaled = false;
    double scaled = 0.0;
    std::string status;
    double seconds = 0.0;
};

struct BoundReport {
    std::string instance;
    int n = 0;
    int m = 0;
    double density = 0.0;
    int k = 0;
    std::vector<MethodResult> methods;
    bool has_exact = false;
    double exact_value = 0.0;
};

/// CSV columns: instance,n,m,density,k,method,bound,scaled_bound,status,seconds.
std::string bound_reports_to_csv(const std::vector<BoundReport>& reports);
std::string bound_reports_to_json(const std::vector<BoundReport>& reports);

} // namespace maxkcut

#endif
