#ifndef MAXKCUT_CERTIFY_HPP
#define MAXKCUT_CERTIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "maxkcut/polytopes.hpp"

namespace maxkcut {

struct TheoremReport {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    double worst_violation = 0.0;
    std::string witness;
    bool pass = false;
    double seconds = 0.0;
    std::vector<std::string> notes;
};

/// k * sum_j x_j x_j^T - ee^T, the matrix whose positive semidefiniteness
/// carries the semidefinite inclusion (no diagonal correction applied).
SymMatrix scaled_gram_minus_ones(const FractionalAssignment& x);

/// Sampled certification of the relaxation-strength statements. Samples are
/// spread over (n, k) in {3..8} x {2,3,4} on complete graphs; `perturb`
/// shifts the lifted points and is a negative control: with a visible
/// perturbation the checks must fail, proving the harness detects
/// violations.
TheoremReport certify_lemma1(long long samples_per_dim, std::uint64_t seed);
TheoremReport certify_theorem2(long long samples, std::uint64_t seed, double perturb = 0.0);
TheoremReport certify_theorem3(long long samples, std::uint64_t seed,
                               double grid_step = 0.02, double grid_tol = 0.01,
                               double perturb = 0.0);
TheoremReport certify_theorem4(long long samples, std::uint64_t seed, double perturb = 0.0);

std::string theorem_reports_to_json(const std::vector<TheoremReport>& reports);

} // namespace maxkcut

#endif
