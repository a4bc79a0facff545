#include "qdc/spectral.hpp"

#include "qdc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qdc {

Matrix SpectralDecomposition::reconstruct() const {
    Matrix r(static_cast<int>(eigenvectors.front().size()));
    for (std::size_t k = 0; k < eigenvalues.size(); ++k)
        r += Complex(eigenvalues[k]) * outer(eigenvectors[k]);
    return r;
}

namespace {

double offdiag_norm(const Matrix& a) {
    double s = 0.0;
    for (int p = 0; p < a.dim(); ++p)
        for (int q = p + 1; q < a.dim(); ++q) s += std::norm(a(p, q));
    return std::sqrt(2.0 * s);
}

void fix_phase(Vector& v) {
    for (const Complex& z : v) {
        const double m = std::abs(z);
        if (m > 1e-8) {
            const Complex phase = std::conj(z) / m;
            for (Complex& w : v) w *= phase;
            return;
        }
    }
}

} // namespace

SpectralDecomposition hermitian_eigendecompose(const Matrix& m) {
    if (!m.is_hermitian(1e-12))
        throw NotHermitianError("hermitian_eigendecompose: matrix is not Hermitian");

    const int n = m.dim();
    // Exact symmetrization so roundoff in the input cannot drift the sweep.
    Matrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    Matrix v = Matrix::identity(n);

    const int max_sweeps = 100;
    const double thresh = 1e-14;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (offdiag_norm(a) < thresh) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double h = std::abs(apq);
                if (h < 1e-300) continue;
                const Complex phase = apq / h;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * h);
                const double t =
                    (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Plane rotation J: J(p,p)=J(q,q)=c, J(p,q)=-s*phase,
                // J(q,p)=s*conj(phase); a <- J^H a J, v <- v J.
                for (int k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + s * std::conj(phase) * akq;
                    a(k, q) = -s * phase * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + s * phase * aqk;
                    a(q, k) = -s * std::conj(phase) * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + s * std::conj(phase) * vkq;
                    v(k, q) = -s * phase * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    SpectralDecomposition out;
    out.eigenvalues.reserve(n);
    out.eigenvectors.reserve(n);
    for (int idx : order) {
        out.eigenvalues.push_back(a(idx, idx).real());
        Vector vec(n);
        for (int k = 0; k < n; ++k) vec[k] = v(k, idx);
        fix_phase(vec);
        out.eigenvectors.push_back(std::move(vec));
    }
    return out;
}

} // namespace qdc
