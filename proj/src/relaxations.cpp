#include "maxkcut/relaxations.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include <json.hpp>

#include "maxkcut/errors.hpp"
#include "maxkcut/exact.hpp"

namespace maxkcut {

double vmilo_relax_bound(const Graph& g) { return g.positive_weight(); }

double vmilo_relax_bound_lp(const Graph& g, int k) {
    const Model m = build_vmilo(g, k);
    const LpSolution sol = simplex_solve(LpProblem::from_model_relaxation(m));
    return sol.objective;
}

RelaxBound emilo_relax_bound(const Graph& g, int k, bool lazy) {
    if (!lazy) {
        const Model m = build_emilo(g, k, false);
        const LpSolution sol = simplex_solve(LpProblem::from_model_relaxation(m));
        return {sol.objective, sol.status, sol.status == LpStatus::Optimal, 0};
    }
    const Model m = build_emilo(g, k, true);
    const auto res = solve_relaxation_rowgen(LpProblem::from_model_relaxation(m),
                                             g.num_vertices(), k);
    return {res.solution.objective, res.solution.status, res.converged, res.rounds};
}

RelaxBound remilo_relax_bound(const Graph& g, int k) {
    const RemiloModel rm = build_remilo(g, k);
    const LpSolution sol = simplex_solve(LpProblem::from_model_relaxation(rm.model));
    return {sol.objective, sol.status, sol.status == LpStatus::Optimal, 0};
}

double bqo_objective(const Graph& g, const FractionalAssignment& x) {
    double total = 0.0;
    for (const auto& e : g.edges()) {
        double dot = 0.0;
        for (int j = 0; j < x.k; ++j) dot += x.at(e.u, j) * x.at(e.v, j);
        total += e.w * (1.0 - dot);
    }
    return total;
}

namespace {

// One in-place sweep. For vertex v the objective is affine in its row, so
// all mass goes to a partition minimizing sum_u w_uv x_uj. Returns true when
// some row moved.
bool ascent_sweep(const Graph& g, FractionalAssignment& x) {
    bool changed = false;
    std::vector<double> marginal(x.k);
    for (int v = 0; v < x.n; ++v) {
        std::fill(marginal.begin(), marginal.end(), 0.0);
        for (auto [u, w] : g.neighbors(v))
            for (int j = 0; j < x.k; ++j) marginal[j] += w * x.at(u, j);
        int best = 0;
        for (int j = 1; j < x.k; ++j)
            if (marginal[j] < marginal[best]) best = j;
        for (int j = 0; j < x.k; ++j) {
            const double want = j == best ? 1.0 : 0.0;
            if (x.at(v, j) != want) changed = true;
            x.at(v, j) = want;
        }
    }
    return changed;
}

} // namespace

Partitioning round_fractional(const Graph& g, int k, const FractionalAssignment& x) {
    if (x.n != g.num_vertices() || x.k != k)
        throw Error(ErrorKind::LengthMismatch, "assignment shape does not match (g, k)");
    require_on_simplex(x);
    FractionalAssignment rounded = x;
    ascent_sweep(g, rounded);
    Partitioning p{std::vector<int>(x.n), k};
    for (int v = 0; v < x.n; ++v)
        for (int j = 0; j < k; ++j)
            if (rounded.at(v, j) == 1.0) p.assignment[v] = j;
    return p;
}

BqoBound bqo_relax_bound(const Graph& g, int k, const BqoBudget& budget) {
    if (k < 2) throw Error(ErrorKind::BadK, "k must be >= 2");
    const int n = g.num_vertices();

    double points = 1.0;
    bool brute_ok = true;
    for (int i = 0; i < n - 1 && brute_ok; ++i) {
        points *= k;
        if (points > static_cast<double>(budget.brute_point_cap)) brute_ok = false;
    }
    if (brute_ok) {
        const auto res = brute_force_opt(g, k);
        return {true, res.value, res.value, res.value};
    }
    const auto bnb = branch_and_bound_opt(g, k, budget.bnb_time_cap_seconds);
    if (bnb.proved) return {true, bnb.value, bnb.value, bnb.value};

    // bracket: multistart ascent below, search bound above
    double lower = bnb.value;
    std::mt19937_64 rng(budget.seed);
    for (int s = 0; s < budget.multistarts; ++s) {
        FractionalAssignment x;
        x.n = n;
        x.k = k;
        x.x.resize(static_cast<std::size_t>(n) * k);
        for (int v = 0; v < n; ++v) {
            double row_sum = 0.0;
            for (int j = 0; j < k; ++j) {
                const double u = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
                x.at(v, j) = -std::log(u);
                row_sum += x.at(v, j);
            }
            for (int j = 0; j < k; ++j) x.at(v, j) /= row_sum;
        }
        for (int sweep = 0; sweep < 200; ++sweep)
            if (!ascent_sweep(g, x)) break;
        Partitioning p{std::vector<int>(n), k};
        for (int v = 0; v < n; ++v)
            for (int j = 0; j < k; ++j)
                if (x.at(v, j) == 1.0) p.assignment[v] = j;
        lower = std::max(lower, cut_value(g, p));
    }
    return {false, lower, lower, bnb.upper_bound};
}

namespace {

std::string fmt_csv(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

std::string bound_reports_to_csv(const std::vector<BoundReport>& reports) {
    std::ostringstream out;
    out << "instance,n,m,density,k,method,bound,scaled_bound,status,seconds\n";
    for (const auto& r : reports)
        for (const auto& m : r.methods) {
            out << r.instance << ',' << r.n << ',' << r.m << ',' << fmt_csv(r.density)
                << ',' << r.k << ',' << m.method << ',';
            if (m.has_bound) out << fmt_csv(m.bound);
            out << ',';
            if (m.has_scaled) out << fmt_csv(m.scaled);
            out << ',' << m.status << ',' << fmt_csv(m.seconds) << '\n';
        }
    return out.str();
}

std::string bound_reports_to_json(const std::vector<BoundReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json jr{{"instance", r.instance}, {"n", r.n},         {"m", r.m},
                          {"density", r.density},   {"k", r.k},         {"methods", nlohmann::json::array()}};
        if (r.has_exact) jr["exact"] = r.exact_value;
        for (const auto& m : r.methods) {
            nlohmann::json jm{{"method", m.method}, {"status", m.status}, {"seconds", m.seconds}};
            if (m.has_bound) jm["bound"] = m.bound;
            if (m.has_scaled) jm["scaled_bound"] = m.scaled;
            jr["methods"].push_back(std::move(jm));
        }
        arr.push_back(std::move(jr));
    }
    return arr.dump(2);
}

} // namespace maxkcut
