#include "maxkcut/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "maxkcut/errors.hpp"

namespace maxkcut {

void LpProblem::add_row(std::vector<double> row, Relation rel, double b) {
    if (static_cast<int>(row.size()) != num_vars())
        throw Error(ErrorKind::LengthMismatch, "row width != variable count");
    rows.push_back(std::move(row));
    relations.push_back(rel);
    rhs.push_back(b);
}

LpProblem LpProblem::from_model_relaxation(const Model& m) {
    if (!m.quadratic_objective.empty())
        throw Error(ErrorKind::HasQuadraticObjective,
                    "LP relaxation requires a linear objective");
    if (!m.psd_blocks.empty())
        throw Error(ErrorKind::HasPsdBlock, "LP relaxation cannot hold PSD blocks");
    LpProblem p;
    p.objective = m.linear_objective;
    p.objective_constant = m.objective_constant;
    for (const auto& v : m.variables) {
        if (!std::isfinite(v.lb) || !std::isfinite(v.ub))
            throw Error(ErrorKind::BadParams, "variable " + v.name + " has infinite bounds");
        p.lower.push_back(v.lb);
        p.upper.push_back(v.ub);
    }
    for (const auto& c : m.constraints) {
        std::vector<double> row(m.variables.size(), 0.0);
        for (const auto& [idx, coeff] : c.terms) row[idx] += coeff;
        p.add_row(std::move(row), c.rel, c.rhs);
    }
    return p;
}

double lp_violation(const LpProblem& p, const std::vector<double>& x) {
    double worst = 0.0;
    for (int j = 0; j < p.num_vars(); ++j) {
        worst = std::max(worst, p.lower[j] - x[j]);
        worst = std::max(worst, x[j] - p.upper[j]);
    }
    for (int i = 0; i < p.num_rows(); ++i) {
        double lhs = 0.0;
        for (int j = 0; j < p.num_vars(); ++j) lhs += p.rows[i][j] * x[j];
        switch (p.relations[i]) {
            case Relation::LessEq: worst = std::max(worst, lhs - p.rhs[i]); break;
            case Relation::GreaterEq: worst = std::max(worst, p.rhs[i] - lhs); break;
            case Relation::Equal: worst = std::max(worst, std::fabs(lhs - p.rhs[i])); break;
        }
    }
    return worst;
}

namespace {
constexpr double kPivotEps = 1e-9;
constexpr double kFeasEps = 1e-9;
constexpr int kStallLimit = 64;
} // namespace

// Internal standard form over shifted variables x' = x - lower:
//   rows ax' {<=,=} b with b >= 0 after sign normalization,
//   upper bounds as extra rows, slack per inequality, artificials for
//   equalities and >= rows during phase 1.
struct SimplexSolver::Impl {
    int nx = 0;                          // structural columns
    int ncols = 0;                       // structural + slacks (no artificials)
    std::vector<std::vector<double>> tab; // each row: ncols coeffs + rhs at back
    std::vector<int> basis;
    std::vector<double> obj;     // reduced-cost row z_j - c_j, length ncols
    double obj_val = 0.0;        // c_B^T b
    std::vector<double> cost;    // phase-2 cost of every column
    std::vector<double> shift;   // lower bounds of the original variables
    double obj_const = 0.0;
    std::vector<double> orig_objective;
    long long iter_cap = 0;
    long long iterations = 0;
    bool solved_optimal = false;

    explicit Impl(const LpProblem& p) {
        nx = p.num_vars();
        if (nx < 1) throw Error(ErrorKind::BadParams, "LP needs at least one variable");
        shift = p.lower;
        orig_objective = p.objective;
        obj_const = p.objective_constant;
        for (int j = 0; j < nx; ++j)
            if (!std::isfinite(p.lower[j]) || !std::isfinite(p.upper[j]) ||
                p.lower[j] > p.upper[j])
                throw Error(ErrorKind::BadParams, "LP variable bounds must be finite and ordered");

        struct RawRow {
            std::vector<double> a;
            Relation rel;
            double b;
        };
        std::vector<RawRow> raw;
        raw.reserve(p.num_rows() + nx);
        for (int i = 0; i < p.num_rows(); ++i) {
            RawRow r{p.rows[i], p.relations[i], p.rhs[i]};
            for (int j = 0; j < nx; ++j) r.b -= r.a[j] * shift[j];
            if (r.rel == Relation::GreaterEq) {
                for (auto& v : r.a) v = -v;
                r.b = -r.b;
                r.rel = Relation::LessEq;
            }
            raw.push_back(std::move(r));
        }
        for (int j = 0; j < nx; ++j) { // upper-bound rows in the shifted space
            RawRow r{std::vector<double>(nx, 0.0), Relation::LessEq, p.upper[j] - p.lower[j]};
            r.a[j] = 1.0;
            raw.push_back(std::move(r));
        }
        // normalize rhs >= 0; <= with negative rhs becomes >=, which needs an
        // artificial below
        struct NormRow {
            std::vector<double> a;
            bool needs_artificial;
            double b;
            bool has_slack;
            double slack_sign;
        };
        std::vector<NormRow> norm;
        for (auto& r : raw) {
            bool flip = r.b < 0.0;
            if (flip) {
                for (auto& v : r.a) v = -v;
                r.b = -r.b;
            }
            NormRow nr;
            nr.a = std::move(r.a);
            nr.b = r.b;
            if (r.rel == Relation::Equal) {
                nr.has_slack = false;
                nr.slack_sign = 0.0;
                nr.needs_artificial = true;
            } else {
                // <= flipped becomes >= : surplus column, artificial start
                nr.has_slack = true;
                nr.slack_sign = flip ? -1.0 : 1.0;
                nr.needs_artificial = flip;
            }
            norm.push_back(std::move(nr));
        }

        const int m = static_cast<int>(norm.size());
        int nslack = 0;
        for (const auto& r : norm) nslack += r.has_slack ? 1 : 0;
        int nart = 0;
        for (const auto& r : norm) nart += r.needs_artificial ? 1 : 0;
        ncols = nx + nslack;
        const int total = ncols + nart;

        tab.assign(m, std::vector<double>(total + 1, 0.0));
        basis.assign(m, -1);
        cost.assign(ncols, 0.0);
        for (int j = 0; j < nx; ++j) cost[j] = p.objective[j];

        int scol = nx, acol = ncols;
        for (int i = 0; i < m; ++i) {
            auto& row = tab[i];
            for (int j = 0; j < nx; ++j) row[j] = norm[i].a[j];
            row[total] = norm[i].b;
            if (norm[i].has_slack) {
                row[scol] = norm[i].slack_sign;
                if (!norm[i].needs_artificial) basis[i] = scol;
                ++scol;
            }
            if (norm[i].needs_artificial) {
                row[acol] = 1.0;
                basis[i] = acol;
                ++acol;
            }
        }
        iter_cap = 50LL * (m + total);

        if (nart > 0) phase1(nart);
        setup_objective_row();
    }

    double& rhs(int i) { return tab[i].back(); }

    void pivot(int r, int c) {
        auto& prow = tab[r];
        const double inv = 1.0 / prow[c];
        for (auto& v : prow) v *= inv;
        prow[c] = 1.0; // exact
        for (std::size_t i = 0; i < tab.size(); ++i) {
            if (static_cast<int>(i) == r) continue;
            auto& row = tab[i];
            const double f = row[c];
            if (f == 0.0) continue;
            const std::size_t w = row.size();
            for (std::size_t j = 0; j < w; ++j) row[j] -= f * prow[j];
            row[c] = 0.0;
        }
        {
            const double f = obj[c];
            if (f != 0.0) {
                for (int j = 0; j < static_cast<int>(obj.size()); ++j) obj[j] -= f * prow[j];
                obj_val -= f * prow.back();
                obj[c] = 0.0;
            }
        }
        basis[r] = c;
        ++iterations;
    }

    // obj row sized to the tableau width minus rhs; during phase 1 that
    // includes artificial columns
    void rebuild_objective(const std::vector<double>& colcost) {
        const std::size_t width = tab.empty() ? colcost.size() : tab[0].size() - 1;
        obj.assign(width, 0.0);
        obj_val = 0.0;
        for (std::size_t j = 0; j < width; ++j)
            obj[j] = -(j < colcost.size() ? colcost[j] : 0.0);
        for (std::size_t i = 0; i < tab.size(); ++i) {
            const int b = basis[i];
            const double cb = b >= 0 && b < static_cast<int>(colcost.size()) ? colcost[b] : 0.0;
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j < obj.size(); ++j) obj[j] += cb * tab[i][j];
            obj_val += cb * tab[i].back();
        }
        // zero out reduced costs of basic columns exactly
        for (int b : basis)
            if (b >= 0 && b < static_cast<int>(obj.size())) obj[b] = 0.0;
    }

    enum class PhaseResult { Optimal, Cap, Unbounded };

    PhaseResult price_and_pivot() {
        bool bland = false;
        int stall = 0;
        double last = obj_val;
        while (true) {
            int enter = -1;
            if (!bland) {
                double best = -kPivotEps;
                for (int j = 0; j < static_cast<int>(obj.size()); ++j)
                    if (obj[j] < best) {
                        best = obj[j];
                        enter = j;
                    }
            } else {
                for (int j = 0; j < static_cast<int>(obj.size()); ++j)
                    if (obj[j] < -kPivotEps) {
                        enter = j;
                        break;
                    }
            }
            if (enter < 0) return PhaseResult::Optimal;
            int leave = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (int i = 0; i < static_cast<int>(tab.size()); ++i) {
                const double a = tab[i][enter];
                if (a <= kPivotEps) continue;
                const double ratio = rhs(i) / a;
                if (ratio < best_ratio - 1e-12 ||
                    (ratio < best_ratio + 1e-12 && (leave < 0 || basis[i] < basis[leave]))) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
            // every variable sits in a box carried as rows, so an unbounded
            // column can only be numerical noise
            if (leave < 0) return PhaseResult::Unbounded;
            pivot(leave, enter);
            if (iterations > iter_cap) return PhaseResult::Cap;
            if (obj_val > last + 1e-12) {
                stall = 0;
                last = obj_val;
            } else if (++stall > kStallLimit) {
                bland = true;
            }
        }
    }

    void phase1(int nart) {
        std::vector<double> p1cost(ncols + nart, 0.0);
        for (int j = ncols; j < ncols + nart; ++j) p1cost[j] = -1.0;
        rebuild_objective(p1cost);
        if (price_and_pivot() != PhaseResult::Optimal) {
            cap_exceeded_ = true;
            return;
        }
        if (obj_val < -1e-7) {
            infeasible_ = true;
            return;
        }
        // kick leftover artificials out of the basis, dropping redundant rows
        for (int i = static_cast<int>(tab.size()) - 1; i >= 0; --i) {
            if (basis[i] < ncols) continue;
            int c = -1;
            for (int j = 0; j < ncols; ++j)
                if (std::fabs(tab[i][j]) > kPivotEps) {
                    c = j;
                    break;
                }
            if (c >= 0) {
                pivot(i, c);
            } else {
                tab.erase(tab.begin() + i);
                basis.erase(basis.begin() + i);
            }
        }
        for (auto& row : tab) {
            const double b = row.back();
            row.resize(ncols);
            row.push_back(b);
        }
    }

    void setup_objective_row() {
        if (infeasible_) return;
        rebuild_objective(cost);
    }

    LpSolution extract(LpStatus status) {
        LpSolution s;
        s.status = status;
        s.iterations = iterations;
        s.x.assign(nx, 0.0);
        for (std::size_t i = 0; i < tab.size(); ++i)
            if (basis[i] >= 0 && basis[i] < nx) s.x[basis[i]] = rhs(static_cast<int>(i));
        for (int j = 0; j < nx; ++j) s.x[j] += shift[j];
        s.objective = obj_const;
        for (int j = 0; j < nx; ++j) s.objective += orig_objective[j] * s.x[j];
        return s;
    }

    LpSolution run() {
        if (infeasible_) {
            LpSolution s;
            s.status = LpStatus::Infeasible;
            s.iterations = iterations;
            return s;
        }
        if (cap_exceeded_) return extract(LpStatus::IterationLimit);
        const bool done = price_and_pivot() == PhaseResult::Optimal;
        solved_optimal = done;
        return extract(done ? LpStatus::Optimal : LpStatus::IterationLimit);
    }

    LpSolution dual_resolve() {
        bool bland = false;
        int stall = 0;
        while (true) {
            int r = -1;
            if (!bland) {
                double worst = -kFeasEps;
                for (int i = 0; i < static_cast<int>(tab.size()); ++i)
                    if (rhs(i) < worst) {
                        worst = rhs(i);
                        r = i;
                    }
            } else {
                for (int i = 0; i < static_cast<int>(tab.size()); ++i)
                    if (rhs(i) < -kFeasEps) {
                        r = i;
                        break;
                    }
            }
            if (r < 0) {
                solved_optimal = true;
                return extract(LpStatus::Optimal);
            }
            int enter = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (int j = 0; j < static_cast<int>(obj.size()); ++j) {
                const double a = tab[r][j];
                if (a >= -kPivotEps) continue;
                const double ratio = obj[j] / (-a);
                if (ratio < best_ratio - 1e-12 ||
                    (ratio < best_ratio + 1e-12 && (enter < 0 || j < enter))) {
                    best_ratio = ratio;
                    enter = j;
                }
            }
            if (enter < 0) {
                solved_optimal = false;
                return extract(LpStatus::Infeasible);
            }
            pivot(r, enter);
            if (iterations > iter_cap) {
                solved_optimal = false;
                return extract(LpStatus::IterationLimit);
            }
            if (++stall > 4 * kStallLimit) bland = true;
        }
    }

    void append_rows(const std::vector<std::vector<double>>& rows,
                     const std::vector<Relation>& rels, const std::vector<double>& rhs_list) {
        for (std::size_t t = 0; t < rows.size(); ++t) {
            if (rels[t] == Relation::Equal)
                throw Error(ErrorKind::BadParams, "only inequality rows can be appended");
            std::vector<double> a = rows[t];
            double b = rhs_list[t];
            for (int j = 0; j < nx; ++j) b -= a[j] * shift[j];
            if (rels[t] == Relation::GreaterEq) {
                for (auto& v : a) v = -v;
                b = -b;
            }
            // widen every row for the new slack column
            const int newcol = static_cast<int>(obj.size());
            for (auto& row : tab) row.insert(row.end() - 1, 0.0);
            obj.push_back(0.0);
            cost.push_back(0.0);
            std::vector<double> full(obj.size() + 1, 0.0);
            for (int j = 0; j < nx; ++j) full[j] = a[j];
            full[newcol] = 1.0;
            full.back() = b;
            // reduce against the current basis
            for (std::size_t i = 0; i < tab.size(); ++i) {
                const double f = full[basis[i]];
                if (f == 0.0) continue;
                for (std::size_t j = 0; j < full.size(); ++j) full[j] -= f * tab[i][j];
                full[basis[i]] = 0.0;
            }
            tab.push_back(std::move(full));
            basis.push_back(newcol);
            ncols = static_cast<int>(obj.size());
        }
        iter_cap += 50LL * static_cast<long long>(rows.size());
    }

    bool infeasible_ = false;
    bool cap_exceeded_ = false;
};

SimplexSolver::SimplexSolver(const LpProblem& p) : impl_(std::make_unique<Impl>(p)) {}
SimplexSolver::~SimplexSolver() = default;
SimplexSolver::SimplexSolver(SimplexSolver&&) noexcept = default;
SimplexSolver& SimplexSolver::operator=(SimplexSolver&&) noexcept = default;

LpSolution SimplexSolver::solve() { return impl_->run(); }

LpSolution SimplexSolver::add_rows_and_resolve(const std::vector<std::vector<double>>& rows,
                                               const std::vector<Relation>& rels,
                                               const std::vector<double>& rhs) {
    if (!impl_->solved_optimal)
        throw Error(ErrorKind::BadParams, "warm restart requires a previous optimal solve");
    impl_->append_rows(rows, rels, rhs);
    return impl_->dual_resolve();
}

LpSolution simplex_solve(const LpProblem& p) { return SimplexSolver(p).solve(); }

} // namespace maxkcut
