#ifndef MAXKCUT_LINALG_HPP
#define MAXKCUT_LINALG_HPP

#include <vector>

namespace maxkcut {

/// Dense symmetric matrix, upper triangle stored row-major.
class SymMatrix {
public:
    explicit SymMatrix(int n);

    int order() const { return n_; }

    double& at(int i, int j) { return a_[idx(i, j)]; }
    double at(int i, int j) const { return a_[idx(i, j)]; }

    double trace() const;
    double frobenius_norm() const;

    /// a += s * b (same order required).
    void add_scaled(const SymMatrix& b, double s);

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t idx(int i, int j) const {
        if (i > j) { int t = i; i = j; j = t; }
        return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i + 1) / 2 + j;
    }

    int n_;
    std::vector<double> a_;
};

/// Rank-one-friendly constructors used by the formulations.
SymMatrix identity_matrix(int n);
SymMatrix ones_matrix(int n); // ee^T

/// Cyclic-by-row Jacobi sweeps until the largest off-diagonal entry drops
/// below tol * max(1, ||A||_F). Returns eigenvalues sorted ascending; throws
/// NoConvergence after 100 sweeps.
std::vector<double> jacobi_eigenvalues(const SymMatrix& a, double tol = 1e-12);

struct PsdCheck {
    bool psd;
    double min_eigenvalue;
};

/// True iff lambda_min >= -tol * max(1, ||A||_F).
PsdCheck is_psd(const SymMatrix& a, double tol = 1e-9);

} // namespace maxkcut

#endif
