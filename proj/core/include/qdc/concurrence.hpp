#pragma once

#include "qdc/density.hpp"

namespace qdc {

/// Wootters concurrence of a two-qubit state, in [0, 1]. Computed through
/// the Hermitian form sqrt(rho) rho_tilde sqrt(rho) with
/// rho_tilde = (sy x sy) conj(rho) (sy x sy); eigenvalue noise below zero
/// is clamped at -1e-10 before the square roots.
double concurrence(const DensityMatrix& rho);

} // namespace qdc
