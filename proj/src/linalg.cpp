#include "maxkcut/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "maxkcut/errors.hpp"

namespace maxkcut {

SymMatrix::SymMatrix(int n) : n_(n) {
    if (n < 1) throw Error(ErrorKind::BadParams, "matrix order must be >= 1");
    a_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0);
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) {
        s += at(i, i) * at(i, i);
        for (int j = i + 1; j < n_; ++j) s += 2.0 * at(i, j) * at(i, j);
    }
    return std::sqrt(s);
}

void SymMatrix::add_scaled(const SymMatrix& b, double s) {
    if (b.n_ != n_) throw Error(ErrorKind::BadDims, "order mismatch in add_scaled");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += s * b.a_[i];
}

SymMatrix identity_matrix(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

SymMatrix ones_matrix(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.at(i, j) = 1.0;
    return m;
}

std::vector<double> jacobi_eigenvalues(const SymMatrix& a, double tol) {
    if (tol <= 0.0) throw Error(ErrorKind::BadParams, "jacobi tol must be positive");
    const int n = a.order();
    // dense working copy
    std::vector<double> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i) * n + j] = a.at(i, j);
    auto e = [&m, n](int i, int j) -> double& { return m[static_cast<std::size_t>(i) * n + j]; };

    const double threshold = tol * std::max(1.0, a.frobenius_norm());
    constexpr int max_sweeps = 100;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::fabs(e(p, q)));
        if (off <= threshold) {
            std::vector<double> eig(n);
            for (int i = 0; i < n; ++i) eig[i] = e(i, i);
            std::sort(eig.begin(), eig.end());
            return eig;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = e(p, q);
                if (std::fabs(apq) <= threshold * 1e-3) continue;
                const double theta = (e(q, q) - e(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double app = e(p, p), aqq = e(q, q);
                e(p, p) = app - t * apq;
                e(q, q) = aqq + t * apq;
                e(p, q) = e(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = e(r, p), arq = e(r, q);
                    e(r, p) = e(p, r) = arp - s * (arq + tau * arp);
                    e(r, q) = e(q, r) = arq + s * (arp - tau * arq);
                }
            }
        }
    }
    throw Error(ErrorKind::NoConvergence, "jacobi did not converge in 100 sweeps");
}

PsdCheck is_psd(const SymMatrix& a, double tol) {
    if (tol < 0.0) throw Error(ErrorKind::BadParams, "is_psd tol must be >= 0");
    const auto eig = jacobi_eigenvalues(a, std::min(tol > 0.0 ? tol : 1e-12, 1e-12));
    const double lam_min = eig.front();
    return {lam_min >= -tol * std::max(1.0, a.frobenius_norm()), lam_min};
}

} // namespace maxkcut
