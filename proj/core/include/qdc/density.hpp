#pragma once

#include "qdc/matrix.hpp"
#include "qdc/spectral.hpp"

namespace qdc {

/// Two-qubit density matrix. Construction validates Hermiticity (1e-12),
/// unit trace (1e-12) and positive semidefiniteness (eigenvalues >= -1e-10);
/// violations throw InvalidStateError / NotHermitianError.
class DensityMatrix {
public:
    explicit DensityMatrix(Matrix m);

    const Matrix& mat() const { return mat_; }
    const SpectralDecomposition& spectrum() const { return spectrum_; }

private:
    Matrix mat_;
    SpectralDecomposition spectrum_;
};

/// Von Neumann entropy in bits. Eigenvalues in [-1e-10, 0) are treated as
/// numerical zeros.
double von_neumann_entropy(const DensityMatrix& rho);

/// Reduced state of qubit 2 (qubit 1 traced out); 2x2, Hermitian, trace 1.
Matrix partial_trace_first(const DensityMatrix& rho);

} // namespace qdc
