#ifndef MAXKCUT_SIMPLEX_HPP
#define MAXKCUT_SIMPLEX_HPP

#include <memory>
#include <vector>

#include "maxkcut/model.hpp"

namespace maxkcut {

/// Dense LP: maximize objective . x subject to rows, with finite bounds on
/// every variable (all the relaxations here live in boxes).
struct LpProblem {
    std::vector<double> objective;
    double objective_constant = 0.0;
    std::vector<std::vector<double>> rows;
    std::vector<Relation> relations;
    std::vector<double> rhs;
    std::vector<double> lower;
    std::vector<double> upper;

    int num_vars() const { return static_cast<int>(objective.size()); }
    int num_rows() const { return static_cast<int>(rows.size()); }

    void add_row(std::vector<double> row, Relation rel, double b);

    /// Continuous relaxation of a linear model: integrality dropped, bounds
    /// kept. Rejects quadratic objectives and PSD blocks.
    static LpProblem from_model_relaxation(const Model& m);
};

enum class LpStatus { Optimal, Infeasible, IterationLimit };

struct LpSolution {
    LpStatus status = LpStatus::IterationLimit;
    std::vector<double> x;
    double objective = 0.0; // includes the constant term
    long long iterations = 0;
};

/// Largest violation of rows and bounds at x.
double lp_violation(const LpProblem& p, const std::vector<double>& x);

/// Two-phase primal simplex on a dense tableau. Dantzig pricing with a
/// Bland fallback after a degeneracy stall. Upper bounds are carried as
/// explicit rows, which keeps the pivoting textbook-simple at desk scale.
/// After an optimal solve, rows can be appended and the solver re-optimizes
/// with dual simplex steps from the previous basis.
class SimplexSolver {
public:
    explicit SimplexSolver(const LpProblem& p);
    ~SimplexSolver();
    SimplexSolver(SimplexSolver&&) noexcept;
    SimplexSolver& operator=(SimplexSolver&&) noexcept;

    LpSolution solve();

    /// Only valid after an Optimal solve. Added rows must be inequalities.
    LpSolution add_rows_and_resolve(const std::vector<std::vector<double>>& rows,
                                    const std::vector<Relation>& rels,
                                    const std::vector<double>& rhs);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// One-shot convenience wrapper.
LpSolution simplex_solve(const LpProblem& p);

} // namespace maxkcut

#endif
