#include "qdc/concurrence.hpp"

#include "qdc/qubits.hpp"
#include "qdc/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace qdc {

double concurrence(const DensityMatrix& rho) {
    const Matrix yy = kron(pauli_y(), pauli_y());
    const Matrix rho_tilde = yy * rho.mat().conjugate() * yy;

    Matrix sqrt_rho(4);
    for (std::size_t k = 0; k < rho.spectrum().eigenvalues.size(); ++k) {
        const double ev = std::max(rho.spectrum().eigenvalues[k], 0.0);
        sqrt_rho += Complex(std::sqrt(ev)) * outer(rho.spectrum().eigenvectors[k]);
    }

    const SpectralDecomposition m = hermitian_eigendecompose(sqrt_rho * rho_tilde * sqrt_rho);
    std::array<double, 4> lam{};
    for (int k = 0; k < 4; ++k) {
        const double ev = std::max(m.eigenvalues[k], -1e-10);
        lam[k] = std::sqrt(std::max(ev, 0.0));
    }
    std::sort(lam.begin(), lam.end(), std::greater<>{});
    const double c = lam[0] - lam[1] - lam[2] - lam[3];
    return std::clamp(c, 0.0, 1.0);
}

} // namespace qdc
