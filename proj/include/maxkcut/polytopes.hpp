#ifndef MAXKCUT_POLYTOPES_HPP
#define MAXKCUT_POLYTOPES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxkcut/formulations.hpp"
#include "maxkcut/graph.hpp"
#include "maxkcut/linalg.hpp"

namespace maxkcut {

/// Point of the relaxed assignment polytope: n rows on the unit k-simplex.
struct FractionalAssignment {
    int n = 0;
    int k = 0;
    std::vector<double> x; // row-major n*k

    double at(int v, int j) const { return x[static_cast<std::size_t>(v) * k + j]; }
    double& at(int v, int j) { return x[static_cast<std::size_t>(v) * k + j]; }
};

/// Throws NotOnSimplex unless every row sums to one within tol and entries
/// stay inside [-tol, 1+tol].
void require_on_simplex(const FractionalAssignment& x, double tol = 1e-9);

/// Uniform simplex rows via exponential normalization, deterministic per
/// seed. The first three entries are fixed corner cases: all-integral rows,
/// all-uniform rows, and one uniform row with the rest integral.
std::vector<FractionalAssignment> sample_fractional_x(int n, int k, std::uint64_t seed,
                                                      int count);

enum class LiftVariant { Y, Z, BigZ, BigZbar };

/// Image of x under one of the polynomial liftings.
struct LiftedPoint {
    LiftVariant variant;
    std::vector<double> y;    // per edge of g (variant Y)
    std::vector<double> z;    // per vertex pair (variant Z)
    std::optional<SymMatrix> matrix; // variants BigZ / BigZbar
};

/// y_uv = 1 - x_u . x_v on edges; z_uv = x_u . x_v on all pairs;
/// Z = D^x + sum_j x_j x_j^T with D^x_vv = 1 - ||x_v||^2;
/// Zbar = (k Z - ee^T) / (k-1).
LiftedPoint lift(const FractionalAssignment& x, const Graph& g, LiftVariant variant);

/// Evaluates 1 - sum a_i + sum_{i<j} a_i a_j (nonnegative on [0,1]^s).
double bilinear_inequality_check(const std::vector<double>& a);

struct Membership {
    bool inside;
    double worst_violation;
    std::string witness; // most violated constraint, for debugging
};

/// Checks the vertex-model relaxation constraints at (x, y) within tol.
Membership member_vmilo(const Graph& g, int k, const FractionalAssignment& x,
                        const std::vector<double>& y, double tol = 1e-9);

enum class CliqueCheckMode { Exact, Greedy };

/// Checks triangle constraints on every vertex triple, clique constraints by
/// exact enumeration or the greedy separation heuristic, and the [0,1] box.
Membership member_emilo(const std::vector<double>& z, int n, int k, double tol = 1e-9,
                        CliqueCheckMode mode = CliqueCheckMode::Exact);

/// Variant I: unit diagonal, [0,1] entries, kZ - ee^T PSD. Variant II: unit
/// diagonal, [-1/(k-1), 1] entries, Z itself PSD. PSD tolerance is relative.
Membership member_misdo(const SymMatrix& m, int k, MisdoVariant variant, double tol = 1e-9);

/// Uniform half-half point: every row (0.5, 0.5, 0, ..., 0) with y = 1
/// everywhere. Inside the vertex-model relaxation, yet no lifting of any
/// simplex point reproduces its y (the true lift gives 0.5 per edge).
struct VmiloCounterexample {
    FractionalAssignment x;
    std::vector<double> y;
    bool vacuous; // edgeless graph: nothing to violate
};
VmiloCounterexample counterexample_vmilo_point(const Graph& g, int k);

/// Constant z = 2/(k(k+1)), feasible for the edge model with the clique
/// constraints tight; requires n > k (BadDims otherwise).
std::vector<double> counterexample_emilo_point(int n, int k);

struct PreimageResult {
    bool found;
    FractionalAssignment x;   // valid when found
    long long points_examined;
};

constexpr long long kDefaultPreimageCap = 100'000'000;

/// Searches the simplex grid (row entries multiples of grid_step, vertex 0
/// restricted to non-increasing rows by column symmetry) for x whose z-lift
/// matches z_target within tol in every pair. DFS with pairwise pruning;
/// throws GridTooLarge past the examination cap.
PreimageResult preimage_search(const std::vector<double>& z_target, int n, int k,
                               double grid_step, double tol,
                               long long cap = kDefaultPreimageCap);

} // namespace maxkcut

#endif
