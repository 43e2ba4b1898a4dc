#include "maxkcut/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "maxkcut/errors.hpp"

namespace maxkcut {

int Model::add_variable(std::string name, double lb, double ub, bool integral) {
    if (lb > ub) throw Error(ErrorKind::BadParams, "variable " + name + ": lb > ub");
    variables.push_back({std::move(name), lb, ub, integral});
    linear_objective.push_back(0.0);
    return static_cast<int>(variables.size()) - 1;
}

void Model::add_linear_objective(int var, double coeff) {
    linear_objective.at(static_cast<std::size_t>(var)) += coeff;
}

void Model::add_quadratic_objective(int i, int j, double coeff) {
    if (i > j) std::swap(i, j);
    for (auto& t : quadratic_objective)
        if (t.i == i && t.j == j) {
            t.coeff += coeff;
            return;
        }
    quadratic_objective.push_back({i, j, coeff});
}

void Model::add_constraint(std::string name, std::vector<std::pair<int, double>> terms,
                           Relation rel, double rhs) {
    const int nv = num_variables();
    for (const auto& [idx, coeff] : terms) {
        (void)coeff;
        if (idx < 0 || idx >= nv)
            throw Error(ErrorKind::BadParams,
                        "constraint " + name + " references undeclared variable");
    }
    constraints.push_back({std::move(name), std::move(terms), rel, rhs});
}

double Model::evaluate_objective(const std::vector<double>& point) const {
    if (point.size() != variables.size())
        throw Error(ErrorKind::LengthMismatch, "point size != variable count");
    double v = objective_constant;
    for (std::size_t i = 0; i < point.size(); ++i) v += linear_objective[i] * point[i];
    for (const auto& t : quadratic_objective) v += t.coeff * point[t.i] * point[t.j];
    return v;
}

double Model::max_linear_violation(const std::vector<double>& point) const {
    if (point.size() != variables.size())
        throw Error(ErrorKind::LengthMismatch, "point size != variable count");
    double worst = 0.0;
    for (std::size_t i = 0; i < point.size(); ++i) {
        worst = std::max(worst, variables[i].lb - point[i]);
        worst = std::max(worst, point[i] - variables[i].ub);
    }
    for (const auto& c : constraints) {
        double lhs = 0.0;
        for (const auto& [idx, coeff] : c.terms) lhs += coeff * point[idx];
        switch (c.rel) {
            case Relation::LessEq: worst = std::max(worst, lhs - c.rhs); break;
            case Relation::GreaterEq: worst = std::max(worst, c.rhs - lhs); break;
            case Relation::Equal: worst = std::max(worst, std::fabs(lhs - c.rhs)); break;
        }
    }
    return worst;
}

double Model::min_psd_eigenvalue(const std::vector<double>& point) const {
    if (point.size() != variables.size())
        throw Error(ErrorKind::LengthMismatch, "point size != variable count");
    double lam = std::numeric_limits<double>::infinity();
    for (const auto& b : psd_blocks) {
        SymMatrix m = b.constant;
        for (const auto& [idx, coeff] : b.var_coeffs) m.add_scaled(coeff, point[idx]);
        lam = std::min(lam, jacobi_eigenvalues(m).front());
    }
    return lam;
}

} // namespace maxkcut
