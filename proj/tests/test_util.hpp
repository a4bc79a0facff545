#pragma once

#include "qdc/density.hpp"
#include "qdc/matrix.hpp"
#include "qdc/spectral.hpp"

#include <random>

namespace qdc::testing {

inline Matrix random_hermitian(std::mt19937& rng, int dim = 4) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) {
        m(i, i) = u(rng);
        for (int j = i + 1; j < dim; ++j) {
            const Complex z(u(rng), u(rng));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

inline DensityMatrix random_density(std::mt19937& rng, int dim = 4) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = Complex(u(rng), u(rng));
    Matrix rho = g * g.adjoint();
    rho *= Complex(1.0 / rho.trace().real());
    return DensityMatrix(rho);
}

/// Random unitary as the eigenvector matrix of a random Hermitian.
inline Matrix random_unitary(std::mt19937& rng, int dim = 4) {
    const SpectralDecomposition s = hermitian_eigendecompose(random_hermitian(rng, dim));
    Matrix u(dim);
    for (int c = 0; c < dim; ++c)
        for (int r = 0; r < dim; ++r) u(r, c) = s.eigenvectors[c][r];
    return u;
}

} // namespace qdc::testing
