#ifndef MAXKCUT_MODEL_HPP
#define MAXKCUT_MODEL_HPP

#include <string>
#include <utility>
#include <vector>

#include "maxkcut/linalg.hpp"

namespace maxkcut {

enum class Relation { LessEq, Equal, GreaterEq };

struct ModelVariable {
    std::string name;
    double lb;
    double ub;
    bool integral;
};

/// Sparse row a^T x (rel) rhs.
struct LinearConstraint {
    std::string name;
    std::vector<std::pair<int, double>> terms;
    Relation rel;
    double rhs;
};

/// Objective term coeff * x_i * x_j, stored with i <= j.
struct QuadTerm {
    int i;
    int j;
    double coeff;
};

/// Affine matrix expression constant + sum_i x_i * coeff_i, required PSD.
struct PsdBlock {
    std::string name;
    SymMatrix constant;
    std::vector<std::pair<int, SymMatrix>> var_coeffs;

    PsdBlock(std::string block_name, SymMatrix constant_part)
        : name(std::move(block_name)), constant(std::move(constant_part)) {}
};

/// Solver-agnostic formulation. Sense is always maximize.
struct Model {
    std::string name;
    std::vector<ModelVariable> variables;
    double objective_constant = 0.0;
    std::vector<double> linear_objective; // dense, one slot per variable
    std::vector<QuadTerm> quadratic_objective;
    std::vector<LinearConstraint> constraints;
    std::vector<PsdBlock> psd_blocks;

    int add_variable(std::string name, double lb, double ub, bool integral);
    void add_linear_objective(int var, double coeff);
    /// Accumulates into the canonical i <= j slot.
    void add_quadratic_objective(int i, int j, double coeff);
    void add_constraint(std::string name, std::vector<std::pair<int, double>> terms,
                        Relation rel, double rhs);

    int num_variables() const { return static_cast<int>(variables.size()); }

    /// Objective value at a full assignment of the variables.
    double evaluate_objective(const std::vector<double>& point) const;
    /// Largest violation over linear constraints and variable bounds.
    double max_linear_violation(const std::vector<double>& point) const;
    /// Smallest eigenvalue over all PSD blocks evaluated at the point
    /// (+infinity when there are none).
    double min_psd_eigenvalue(const std::vector<double>& point) const;
};

} // namespace maxkcut

#endif
