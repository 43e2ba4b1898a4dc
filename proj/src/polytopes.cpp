#include "maxkcut/polytopes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <sstream>

#include "maxkcut/errors.hpp"
#include "maxkcut/rowgen.hpp"

namespace maxkcut {

void require_on_simplex(const FractionalAssignment& x, double tol) {
    if (static_cast<int>(x.x.size()) != x.n * x.k)
        throw Error(ErrorKind::LengthMismatch, "assignment storage size != n*k");
    for (int v = 0; v < x.n; ++v) {
        double s = 0.0;
        for (int j = 0; j < x.k; ++j) {
            const double e = x.at(v, j);
            if (e < -tol || e > 1.0 + tol)
                throw Error(ErrorKind::NotOnSimplex,
                            "row " + std::to_string(v) + " leaves the box");
            s += e;
        }
        if (std::fabs(s - 1.0) > tol)
            throw Error(ErrorKind::NotOnSimplex,
                        "row " + std::to_string(v) + " sums to " + std::to_string(s));
    }
}

std::vector<FractionalAssignment> sample_fractional_x(int n, int k, std::uint64_t seed,
                                                      int count) {
    if (n < 1 || k < 2 || count < 1)
        throw Error(ErrorKind::BadParams, "need n >= 1, k >= 2, count >= 1");
    std::vector<FractionalAssignment> out;
    out.reserve(count);
    auto blank = [n, k] {
        FractionalAssignment x;
        x.n = n;
        x.k = k;
        x.x.assign(static_cast<std::size_t>(n) * k, 0.0);
        return x;
    };

    { // corner case: integral rows
        FractionalAssignment x = blank();
        for (int v = 0; v < n; ++v) x.at(v, v % k) = 1.0;
        out.push_back(std::move(x));
    }
    if (count >= 2) { // corner case: every row uniform
        FractionalAssignment x = blank();
        for (int v = 0; v < n; ++v)
            for (int j = 0; j < k; ++j) x.at(v, j) = 1.0 / k;
        out.push_back(std::move(x));
    }
    if (count >= 3) { // corner case: one uniform row, rest integral
        FractionalAssignment x = blank();
        for (int j = 0; j < k; ++j) x.at(0, j) = 1.0 / k;
        for (int v = 1; v < n; ++v) x.at(v, v % k) = 1.0;
        out.push_back(std::move(x));
    }

    std::mt19937_64 rng(seed);
    while (static_cast<int>(out.size()) < count) {
        FractionalAssignment x = blank();
        for (int v = 0; v < n; ++v) {
            double s = 0.0;
            for (int j = 0; j < k; ++j) {
                const double u = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
                x.at(v, j) = -std::log(u); // exponential; normalized rows are uniform
                s += x.at(v, j);
            }
            for (int j = 0; j < k; ++j) x.at(v, j) /= s;
        }
        out.push_back(std::move(x));
    }
    return out;
}

namespace {

double row_dot(const FractionalAssignment& x, int u, int v) {
    double d = 0.0;
    for (int j = 0; j < x.k; ++j) d += x.at(u, j) * x.at(v, j);
    return d;
}

} // namespace

LiftedPoint lift(const FractionalAssignment& x, const Graph& g, LiftVariant variant) {
    LiftedPoint p;
    p.variant = variant;
    switch (variant) {
        case LiftVariant::Y:
            p.y.reserve(g.num_edges());
            for (const auto& e : g.edges()) p.y.push_back(1.0 - row_dot(x, e.u, e.v));
            break;
        case LiftVariant::Z:
            p.z.resize(num_pairs(x.n));
            for (int u = 0; u < x.n; ++u)
                for (int v = u + 1; v < x.n; ++v)
                    p.z[pair_index(x.n, u, v)] = row_dot(x, u, v);
            break;
        case LiftVariant::BigZ: {
            SymMatrix m(x.n);
            for (int u = 0; u < x.n; ++u) {
                m.at(u, u) = 1.0; // the diagonal correction pins it exactly
                for (int v = u + 1; v < x.n; ++v) m.at(u, v) = row_dot(x, u, v);
            }
            p.matrix = std::move(m);
            break;
        }
        case LiftVariant::BigZbar: {
            SymMatrix m(x.n);
            for (int u = 0; u < x.n; ++u) {
                m.at(u, u) = 1.0;
                for (int v = u + 1; v < x.n; ++v)
                    m.at(u, v) = (x.k * row_dot(x, u, v) - 1.0) / (x.k - 1);
            }
            p.matrix = std::move(m);
            break;
        }
    }
    return p;
}

double bilinear_inequality_check(const std::vector<double>& a) {
    if (a.size() < 2) throw Error(ErrorKind::BadDims, "needs at least two entries");
    double value = 1.0;
    for (double v : a) value -= v;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) value += a[i] * a[j];
    return value;
}

namespace {

struct WorstTracker {
    double worst = 0.0;
    std::string witness;

    void check(double violation, const std::string& what) {
        if (violation > worst) {
            worst = violation;
            witness = what;
        }
    }
};

} // namespace

Membership member_vmilo(const Graph& g, int k, const FractionalAssignment& x,
                        const std::vector<double>& y, double tol) {
    if (x.n != g.num_vertices() || x.k != k ||
        static_cast<int>(y.size()) != g.num_edges())
        throw Error(ErrorKind::LengthMismatch, "shapes do not match (g, k)");
    WorstTracker t;
    for (int v = 0; v < x.n; ++v) {
        double s = 0.0;
        for (int j = 0; j < k; ++j) {
            s += x.at(v, j);
            t.check(-x.at(v, j), "x box lower at (" + std::to_string(v) + ")");
            t.check(x.at(v, j) - 1.0, "x box upper at (" + std::to_string(v) + ")");
        }
        t.check(std::fabs(s - 1.0), "assignment row " + std::to_string(v));
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edges()[e];
        const std::string tag = std::to_string(ed.u) + "," + std::to_string(ed.v);
        t.check(-y[e], "y box lower at (" + tag + ")");
        t.check(y[e] - 1.0, "y box upper at (" + tag + ")");
        for (int j = 0; j < k; ++j) {
            const double xu = x.at(ed.u, j), xv = x.at(ed.v, j);
            t.check(xu - xv - y[e], "difference (" + tag + ") j=" + std::to_string(j));
            t.check(xv - xu - y[e], "difference (" + tag + ") j=" + std::to_string(j));
            t.check(xu + xv + y[e] - 2.0, "same-partition (" + tag + ") j=" + std::to_string(j));
        }
    }
    return {t.worst <= tol, t.worst, t.witness};
}

Membership member_emilo(const std::vector<double>& z, int n, int k, double tol,
                        CliqueCheckMode mode) {
    if (static_cast<int>(z.size()) != num_pairs(n))
        throw Error(ErrorKind::LengthMismatch, "z is not pair-indexed over n vertices");
    WorstTracker t;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const double val = z[pair_index(n, u, v)];
            const std::string tag = std::to_string(u) + "," + std::to_string(v);
            t.check(-val, "z box lower (" + tag + ")");
            t.check(val - 1.0, "z box upper (" + tag + ")");
        }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const double ab = z[pair_index(n, a, b)];
                const double bc = z[pair_index(n, b, c)];
                const double ac = z[pair_index(n, a, c)];
                const std::string tag = std::to_string(a) + "," + std::to_string(b) + "," +
                                        std::to_string(c);
                t.check(ab + bc - ac - 1.0, "triangle (" + tag + ")");
                t.check(ac + ab - bc - 1.0, "triangle (" + tag + ")");
                t.check(bc + ac - ab - 1.0, "triangle (" + tag + ")");
            }
    if (k + 1 <= n) {
        std::vector<double> boxed = z;
        for (auto& v : boxed) v = std::clamp(v, 0.0, 1.0);
        const auto cuts = separate_clique_cuts(
            boxed, n, k,
            mode == CliqueCheckMode::Exact ? SeparationMode::Exact : SeparationMode::Greedy, 1,
            tol);
        if (!cuts.empty()) {
            std::string tag;
            for (int v : cuts.front().vertices) tag += std::to_string(v) + ",";
            // recompute on the unclipped values so the reported violation is honest
            double sum = 0.0;
            for (std::size_t i = 0; i < cuts.front().vertices.size(); ++i)
                for (std::size_t j = i + 1; j < cuts.front().vertices.size(); ++j)
                    sum += z[pair_index(n, cuts.front().vertices[i], cuts.front().vertices[j])];
            t.check(1.0 - sum, "clique {" + tag + "}");
        }
    }
    return {t.worst <= tol, t.worst, t.witness};
}

Membership member_misdo(const SymMatrix& m, int k, MisdoVariant variant, double tol) {
    const int n = m.order();
    WorstTracker t;
    const double lo = variant == MisdoVariant::I ? 0.0 : -1.0 / (k - 1);
    for (int u = 0; u < n; ++u) {
        t.check(std::fabs(m.at(u, u) - 1.0), "diagonal at " + std::to_string(u));
        for (int v = u + 1; v < n; ++v) {
            const std::string tag = std::to_string(u) + "," + std::to_string(v);
            t.check(lo - m.at(u, v), "entry lower (" + tag + ")");
            t.check(m.at(u, v) - 1.0, "entry upper (" + tag + ")");
        }
    }
    SymMatrix test(n);
    if (variant == MisdoVariant::I) {
        test.add_scaled(ones_matrix(n), -1.0);
        test.add_scaled(m, static_cast<double>(k));
    } else {
        test = m;
    }
    const auto psd = is_psd(test, tol);
    if (!psd.psd)
        t.check(-psd.min_eigenvalue,
                "psd block lambda_min = " + std::to_string(psd.min_eigenvalue));
    const bool inside = t.worst <= tol && psd.psd;
    return {inside, t.worst, t.witness};
}

VmiloCounterexample counterexample_vmilo_point(const Graph& g, int k) {
    if (k < 2) throw Error(ErrorKind::BadK, "k must be >= 2");
    VmiloCounterexample c;
    c.x.n = g.num_vertices();
    c.x.k = k;
    c.x.x.assign(static_cast<std::size_t>(c.x.n) * k, 0.0);
    for (int v = 0; v < c.x.n; ++v) {
        c.x.at(v, 0) = 0.5;
        c.x.at(v, 1) = 0.5;
    }
    c.y.assign(g.num_edges(), 1.0);
    c.vacuous = g.num_edges() == 0;
    return c;
}

std::vector<double> counterexample_emilo_point(int n, int k) {
    if (k < 2) throw Error(ErrorKind::BadK, "k must be >= 2");
    if (n <= k)
        throw Error(ErrorKind::BadDims, "the constant point needs n > k");
    return std::vector<double>(num_pairs(n), 2.0 / (static_cast<double>(k) * (k + 1)));
}

// ---------------------------------------------------------------------------
// grid preimage search

namespace {

// all rows (c_1..c_k), sum c_i = h, as values c_i / h
void enumerate_rows(int k, int h, std::vector<std::vector<double>>& rows) {
    std::vector<int> c(k, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == k - 1) {
            c[pos] = left;
            std::vector<double> row(k);
            for (int j = 0; j < k; ++j) row[j] = static_cast<double>(c[j]) / h;
            rows.push_back(std::move(row));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            c[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, h);
}

bool non_increasing(const std::vector<double>& row) {
    for (std::size_t j = 1; j < row.size(); ++j)
        if (row[j] > row[j - 1] + 1e-15) return false;
    return true;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) d += a[j] * b[j];
    return d;
}

struct GridSearch {
    const std::vector<std::vector<double>>& rows;
    const std::vector<double>& target; // pair-indexed
    int n;
    double tol;
    long long cap;
    long long examined = 0;
    std::vector<int> pick;

    bool compatible(int u, int v) const {
        const double want = target[pair_index(n, u, v)];
        return std::fabs(dot(rows[pick[u]], rows[pick[v]]) - want) <= tol;
    }

    // plain DFS, pairs checked as soon as both endpoints are placed
    bool dfs(int depth) {
        if (depth == n) return true;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (++examined > cap)
                throw Error(ErrorKind::GridTooLarge, "preimage search exceeded the point cap");
            pick[depth] = static_cast<int>(r);
            bool ok = true;
            for (int s = 0; s < depth && ok; ++s) ok = compatible(s, depth);
            if (ok && dfs(depth + 1)) return true;
        }
        return false;
    }
};

// bitset-accelerated variant: per distinct target value, row-vs-row
// compatibility masks; candidate sets shrink by AND as vertices are placed
struct BitsetSearch {
    const std::vector<std::vector<double>>& rows;
    const std::vector<double>& target;
    int n;
    double tol;
    long long cap;
    long long examined = 0;
    std::vector<int> pick;

    std::vector<double> values; // distinct target values
    // masks[v][r] : bitmask over rows s with |rows[r].rows[s] - values[v]| <= tol
    std::vector<std::vector<std::vector<std::uint64_t>>> masks;
    int words = 0;

    void build() {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const double w = target[pair_index(n, u, v)];
                bool found = false;
                for (double hv : values)
                    if (std::fabs(hv - w) <= 1e-15) found = true;
                if (!found) values.push_back(w);
            }
        const std::size_t R = rows.size();
        words = static_cast<int>((R + 63) / 64);
        masks.assign(values.size(),
                     std::vector<std::vector<std::uint64_t>>(
                         R, std::vector<std::uint64_t>(words, 0)));
        for (std::size_t vi = 0; vi < values.size(); ++vi)
            for (std::size_t r = 0; r < R; ++r)
                for (std::size_t s = 0; s < R; ++s)
                    if (std::fabs(dot(rows[r], rows[s]) - values[vi]) <= tol)
                        masks[vi][r][s / 64] |= 1ULL << (s % 64);
    }

    int value_index(int u, int v) const {
        const double w = target[pair_index(n, u, v)];
        for (std::size_t i = 0; i < values.size(); ++i)
            if (std::fabs(values[i] - w) <= 1e-15) return static_cast<int>(i);
        return 0; // unreachable by construction
    }

    bool dfs(int depth, const std::vector<std::uint64_t>& candidates) {
        if (depth == n) return true;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = candidates[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                const int r = w * 64 + b;
                if (++examined > cap)
                    throw Error(ErrorKind::GridTooLarge,
                                "preimage search exceeded the point cap");
                pick[depth] = r;
                if (depth + 1 == n) return true;
                std::vector<std::uint64_t> next(words, ~0ULL);
                for (int s = 0; s <= depth; ++s) {
                    const auto& m = masks[value_index(s, depth + 1)][pick[s]];
                    for (int t = 0; t < words; ++t) next[t] &= m[t];
                }
                if (dfs(depth + 1, next)) return true;
            }
        }
        return false;
    }
};

} // namespace

PreimageResult preimage_search(const std::vector<double>& z_target, int n, int k,
                               double grid_step, double tol, long long cap) {
    if (static_cast<int>(z_target.size()) != num_pairs(n))
        throw Error(ErrorKind::LengthMismatch, "target is not pair-indexed over n vertices");
    if (grid_step <= 0.0 || grid_step > 0.5)
        throw Error(ErrorKind::BadParams, "grid_step must lie in (0, 0.5]");
    const long long h = std::llround(1.0 / grid_step);
    if (std::fabs(h * grid_step - 1.0) > 1e-9)
        throw Error(ErrorKind::BadParams, "1/grid_step must be an integer");

    std::vector<std::vector<double>> rows;
    double row_count = 1.0; // C(h+k-1, k-1)
    for (int i = 1; i <= k - 1; ++i) row_count = row_count * (h + k - i) / i;
    if (row_count > 2e6)
        throw Error(ErrorKind::GridTooLarge, "simplex grid has too many rows");
    enumerate_rows(k, static_cast<int>(h), rows);

    PreimageResult res{false, {}, 0};
    std::vector<int> pick(n, -1);

    const double bitset_cost = row_count * row_count * num_pairs(n);
    if (rows.size() <= 4000 && bitset_cost <= 2e8) {
        BitsetSearch bs{rows, z_target, n, tol, cap, 0, pick, {}, {}, 0};
        bs.build();
        for (std::size_t r0 = 0; r0 < rows.size() && !res.found; ++r0) {
            if (!non_increasing(rows[r0])) continue; // column symmetry
            if (++bs.examined > cap)
                throw Error(ErrorKind::GridTooLarge, "preimage search exceeded the point cap");
            bs.pick[0] = static_cast<int>(r0);
            if (n == 1) {
                res.found = true;
                break;
            }
            std::vector<std::uint64_t> cands(bs.words, ~0ULL);
            const auto& m = bs.masks[bs.value_index(0, 1)][r0];
            for (int t = 0; t < bs.words; ++t) cands[t] &= m[t];
            if (bs.dfs(1, cands)) res.found = true;
        }
        res.points_examined = bs.examined;
        pick = bs.pick;
    } else {
        GridSearch gs{rows, z_target, n, tol, cap, 0, pick};
        for (std::size_t r0 = 0; r0 < rows.size() && !res.found; ++r0) {
            if (!non_increasing(rows[r0])) continue;
            if (++gs.examined > cap)
                throw Error(ErrorKind::GridTooLarge, "preimage search exceeded the point cap");
            gs.pick[0] = static_cast<int>(r0);
            if (n == 1 || gs.dfs(1)) res.found = true;
        }
        res.points_examined = gs.examined;
        pick = gs.pick;
    }

    if (res.found) {
        res.x.n = n;
        res.x.k = k;
        res.x.x.resize(static_cast<std::size_t>(n) * k);
        for (int v = 0; v < n; ++v)
            for (int j = 0; j < k; ++j) res.x.at(v, j) = rows[pick[v]][j];
    }
    return res;
}

} // namespace maxkcut
