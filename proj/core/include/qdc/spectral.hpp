#pragma once

#include "qdc/matrix.hpp"

#include <vector>

namespace qdc {

/// Eigenvalues ascending; eigenvectors[k] is the unit-norm eigenvector of
/// eigenvalues[k]. The phase of each vector is fixed by making its first
/// significant component real and positive.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    std::vector<Vector> eigenvectors;

    Matrix reconstruct() const;
};

/// Cyclic Jacobi diagonalization for small Hermitian matrices.
/// Throws NotHermitianError if the input fails the 1e-12 symmetry check.
SpectralDecomposition hermitian_eigendecompose(const Matrix& m);

} // namespace qdc
