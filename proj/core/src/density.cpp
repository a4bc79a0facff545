#include "qdc/density.hpp"

#include "qdc/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qdc {

DensityMatrix::DensityMatrix(Matrix m) : mat_(std::move(m)) {
    if (mat_.dim() != 4) throw InvalidStateError("DensityMatrix: dimension must be 4");
    if (!mat_.all_finite()) throw InvalidStateError("DensityMatrix: non-finite entries");
    if (!mat_.is_hermitian(1e-12)) throw NotHermitianError("DensityMatrix: not Hermitian");
    if (std::abs(mat_.trace() - Complex(1.0)) > 1e-12)
        throw InvalidStateError("DensityMatrix: trace != 1");
    spectrum_ = hermitian_eigendecompose(mat_);
    for (double ev : spectrum_.eigenvalues)
        if (ev < -1e-10)
            throw InvalidStateError("DensityMatrix: negative eigenvalue " + std::to_string(ev));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double p : rho.spectrum().eigenvalues) {
        if (p < 0.0) p = 0.0; // [-1e-10, 0) window, genuine violations rejected at construction
        if (p > 0.0) s -= p * std::log2(p);
    }
    return s;
}

Matrix partial_trace_first(const DensityMatrix& rho) {
    Matrix r(2);
    for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l)
            for (int i = 0; i < 2; ++i) r(j, l) += rho.mat()(2 * i + j, 2 * i + l);
    return r;
}

} // namespace qdc
