#include "maxkcut/rowgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "maxkcut/errors.hpp"
#include "maxkcut/formulations.hpp"

namespace maxkcut {

namespace {

double binomial_d(int n, int r) {
    if (r < 0 || r > n) return 0.0;
    double acc = 1.0;
    for (int i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
    return acc;
}

struct CutCollector {
    int max_cuts;
    std::vector<CliqueCut> cuts;

    void offer(std::vector<int> q, double sum) {
        cuts.push_back({std::move(q), sum});
        std::sort(cuts.begin(), cuts.end(), [](const CliqueCut& a, const CliqueCut& b) {
            return a.pair_sum != b.pair_sum ? a.pair_sum < b.pair_sum
                                            : a.vertices < b.vertices;
        });
        if (static_cast<int>(cuts.size()) > max_cuts) cuts.pop_back();
    }
    double worst_kept() const {
        return static_cast<int>(cuts.size()) < max_cuts
                   ? std::numeric_limits<double>::infinity()
                   : cuts.back().pair_sum;
    }
};

void enumerate_exact(const std::vector<double>& z, int n, int k, double tol,
                     CutCollector& out) {
    std::vector<int> chosen;
    std::vector<double> partial{0.0};
    // DFS over ascending vertex ids; z >= 0 so a partial sum at 1 already
    // kills every completion
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(chosen.size()) == k + 1) {
            const double s = partial.back();
            if (s < 1.0 - tol && s < out.worst_kept())
                out.offer(chosen, s);
            return;
        }
        const int need = k + 1 - static_cast<int>(chosen.size());
        for (int v = start; v + need - 1 < n; ++v) {
            double add = 0.0;
            for (int q : chosen) add += z[pair_index(n, q, v)];
            const double s = partial.back() + add;
            if (s >= 1.0 - tol) continue;
            chosen.push_back(v);
            partial.push_back(s);
            self(self, v + 1);
            chosen.pop_back();
            partial.pop_back();
        }
    };
    rec(rec, 0);
}

void grow_greedy(const std::vector<double>& z, int n, int k, double tol, CutCollector& out,
                 std::set<std::vector<int>>& seen) {
    for (int seed = 0; seed < n; ++seed) {
        if (k + 1 > n) return;
        std::vector<int> q{seed};
        std::vector<bool> in(n, false);
        in[seed] = true;
        double sum = 0.0;
        while (static_cast<int>(q.size()) < k + 1) {
            int best = -1;
            double best_add = 0.0;
            for (int v = 0; v < n; ++v) {
                if (in[v]) continue;
                double add = 0.0;
                for (int u : q) add += z[pair_index(n, u, v)];
                if (best < 0 || add < best_add) {
                    best = v;
                    best_add = add;
                }
            }
            q.push_back(best);
            in[best] = true;
            sum += best_add;
        }
        if (sum >= 1.0 - tol) continue;
        std::sort(q.begin(), q.end());
        if (seen.insert(q).second) out.offer(std::move(q), sum);
    }
}

} // namespace

std::vector<CliqueCut> separate_clique_cuts(const std::vector<double>& z, int n, int k,
                                            SeparationMode mode, int max_cuts, double tol) {
    if (static_cast<int>(z.size()) != num_pairs(n))
        throw Error(ErrorKind::LengthMismatch, "z is not pair-indexed over n vertices");
    if (max_cuts < 1) throw Error(ErrorKind::BadParams, "max_cuts must be >= 1");
    CutCollector out{max_cuts, {}};
    if (k + 1 > n) return out.cuts;
    if (mode == SeparationMode::Exact) {
        enumerate_exact(z, n, k, tol, out);
    } else {
        std::set<std::vector<int>> seen;
        grow_greedy(z, n, k, tol, out, seen);
    }
    return out.cuts;
}

RowgenResult solve_relaxation_rowgen(const LpProblem& base, int n, int k,
                                     long long cap_rows, int max_cuts_per_round) {
    const SeparationMode mode =
        binomial_d(n, k + 1) <= 1e6 ? SeparationMode::Exact : SeparationMode::Greedy;

    RowgenResult res;
    SimplexSolver solver(base);
    LpSolution sol = solver.solve();
    res.round_objectives.push_back(sol.objective);
    long long rows_added = 0;

    while (sol.status == LpStatus::Optimal) {
        std::vector<double> z(sol.x.begin(), sol.x.begin() + num_pairs(n));
        for (auto& v : z) v = std::clamp(v, 0.0, 1.0);
        const auto cuts = separate_clique_cuts(z, n, k, mode, max_cuts_per_round);
        if (cuts.empty()) {
            res.converged = true;
            break;
        }
        if (rows_added + static_cast<long long>(cuts.size()) > cap_rows) {
            res.converged = false; // RowCap: best bound so far is still valid
            break;
        }
        std::vector<std::vector<double>> rows;
        std::vector<Relation> rels;
        std::vector<double> rhs;
        for (const auto& c : cuts) {
            std::vector<double> row(base.num_vars(), 0.0);
            for (std::size_t i = 0; i < c.vertices.size(); ++i)
                for (std::size_t j = i + 1; j < c.vertices.size(); ++j)
                    row[pair_index(n, c.vertices[i], c.vertices[j])] = 1.0;
            rows.push_back(std::move(row));
            rels.push_back(Relation::GreaterEq);
            rhs.push_back(1.0);
        }
        rows_added += static_cast<long long>(rows.size());
        ++res.rounds;
        sol = solver.add_rows_and_resolve(rows, rels, rhs);
        res.round_objectives.push_back(sol.objective);
    }
    res.solution = sol;
    res.cuts_added = rows_added;
    if (sol.status != LpStatus::Optimal) res.converged = false;
    return res;
}

} // namespace maxkcut
