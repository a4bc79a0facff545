#pragma once

#include "qdc/density.hpp"
#include "qdc/matrix.hpp"
#include "qdc/spectral.hpp"

namespace qdc {

enum class ModelKind { Xxz, Dm };

/// Full physical configuration of one parameter point. `anisotropy` is
/// Delta for the XXZ model and D for the DM model; energies and T share
/// the same dimensionless units (Boltzmann constant = 1).
struct ModelParams {
    ModelKind kind = ModelKind::Xxz;
    double coupling = 0.0;    // J
    double anisotropy = 0.0;  // Delta or D
    double temperature = 0.0; // T
};

struct ThermalState {
    DensityMatrix rho;
    double partition_function;
    ModelParams params;
};

struct XxzAux {
    double lambda; // 1 + e^{J Delta/T} cosh(J/T)
    double xi;     // Delta cosh(J/T) + sinh(J/T)
};

struct DmAux {
    double eta;   // 1 + e^{J/T} cosh(delta/(2T))
    double zeta;  // 2J cosh(delta/(2T)) + delta sinh(delta/(2T))
    double delta; // 2J sqrt(1+D^2)
    double theta; // arctan D
};

/// 4x4 Hamiltonian in the basis order |11>,|10>,|01>,|00>.
Matrix hamiltonian(const ModelParams& params);

/// Analytic eigensystem, eigenvalues ascending. XXZ: J Delta/2 for |00>,|11>
/// and -J Delta/2 +- J for |Psi+->; DM: J/2 for |00>,|11> and
/// +-J sqrt(1+D^2) - J/2 for |+->.
SpectralDecomposition eigensystem(const ModelParams& params);

/// Gibbs state at params.temperature. Boltzmann exponents are shifted by
/// the ground energy before exponentiation, so T -> 0+ is stable.
ThermalState thermal_state(const ModelParams& params);

/// Equal mixture over the ground manifold, i.e. the T -> 0+ limit of the
/// thermal state. A level belongs to the manifold when
/// E - E_min <= tol * max(1, |E_min|).
DensityMatrix ground_state_mixture(const ModelParams& params, double degeneracy_tol = 1e-9);

XxzAux xxz_aux(const ModelParams& params);
DmAux dm_aux(const ModelParams& params);

} // namespace qdc
