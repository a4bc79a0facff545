#include "qdc/spin_models.hpp"

#include "qdc/errors.hpp"
#include "qdc/qubits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qdc {

namespace {

void require_temperature(const ModelParams& p) {
    if (!(p.temperature > 0.0))
        throw InvalidTemperatureError("temperature must be > 0");
}

// Unsorted analytic eigenpairs shared by eigensystem(), thermal_state() and
// ground_state_mixture().
struct EigenPairs {
    std::array<double, 4> energies;
    std::array<Vector, 4> states;
};

EigenPairs analytic_pairs(const ModelParams& p) {
    const double j = p.coupling;
    EigenPairs e;
    if (p.kind == ModelKind::Xxz) {
        const double d = p.anisotropy;
        e.energies = {j * d / 2.0, j * d / 2.0, -j * d / 2.0 + j, -j * d / 2.0 - j};
        e.states = {two_qubit_ket(0, 0), two_qubit_ket(1, 1), epr_ket(+1), epr_ket(-1)};
    } else {
        const double dd = p.anisotropy;
        const double g = j * std::sqrt(1.0 + dd * dd);
        const double theta = std::atan(dd);
        e.energies = {j / 2.0, j / 2.0, g - j / 2.0, -g - j / 2.0};
        e.states = {two_qubit_ket(0, 0), two_qubit_ket(1, 1), epr_ket(+1, theta),
                    epr_ket(-1, theta)};
    }
    return e;
}

} // namespace

Matrix hamiltonian(const ModelParams& params) {
    const Matrix sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
    const Matrix xx = kron(sx, sx), yy = kron(sy, sy), zz = kron(sz, sz);
    const double j = params.coupling;
    Matrix h(4);
    if (params.kind == ModelKind::Xxz) {
        h = Complex(j / 2.0) * (xx + yy) + Complex(j * params.anisotropy / 2.0) * zz;
    } else {
        const Matrix dm = kron(sx, sy) - kron(sy, sx);
        h = Complex(j / 2.0) * (xx + yy + zz) + Complex(j * params.anisotropy / 2.0) * dm;
    }
    return h;
}

SpectralDecomposition eigensystem(const ModelParams& params) {
    EigenPairs e = analytic_pairs(params);
    std::array<int, 4> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(),
                     [&e](int a, int b) { return e.energies[a] < e.energies[b]; });
    SpectralDecomposition out;
    for (int idx : order) {
        out.eigenvalues.push_back(e.energies[idx]);
        out.eigenvectors.push_back(e.states[idx]);
    }
    return out;
}

ThermalState thermal_state(const ModelParams& params) {
    require_temperature(params);
    const EigenPairs e = analytic_pairs(params);
    const double e_min = *std::min_element(e.energies.begin(), e.energies.end());

    std::array<double, 4> w{};
    double norm = 0.0;
    for (int k = 0; k < 4; ++k) {
        w[k] = std::exp(-(e.energies[k] - e_min) / params.temperature);
        norm += w[k];
    }
    Matrix rho(4);
    for (int k = 0; k < 4; ++k) rho += Complex(w[k] / norm) * outer(e.states[k]);

    double z = 0.0;
    for (double en : e.energies) z += std::exp(-en / params.temperature);
    return ThermalState{DensityMatrix(rho), z, params};
}

DensityMatrix ground_state_mixture(const ModelParams& params, double degeneracy_tol) {
    const EigenPairs e = analytic_pairs(params);
    const double e_min = *std::min_element(e.energies.begin(), e.energies.end());
    const double window = degeneracy_tol * std::max(1.0, std::abs(e_min));

    std::vector<int> manifold;
    for (int k = 0; k < 4; ++k)
        if (e.energies[k] - e_min <= window) manifold.push_back(k);

    Matrix rho(4);
    for (int k : manifold)
        rho += Complex(1.0 / static_cast<double>(manifold.size())) * outer(e.states[k]);
    return DensityMatrix(rho);
}

XxzAux xxz_aux(const ModelParams& params) {
    if (params.kind != ModelKind::Xxz) throw WrongModelKindError("xxz_aux: wrong model kind");
    require_temperature(params);
    const double bt = params.coupling / params.temperature;
    const double g = params.coupling * params.anisotropy / params.temperature;
    return XxzAux{1.0 + std::exp(g) * std::cosh(bt),
                  params.anisotropy * std::cosh(bt) + std::sinh(bt)};
}

DmAux dm_aux(const ModelParams& params) {
    if (params.kind != ModelKind::Dm) throw WrongModelKindError("dm_aux: wrong model kind");
    require_temperature(params);
    const double d = params.anisotropy;
    const double delta = 2.0 * params.coupling * std::sqrt(1.0 + d * d);
    const double x = delta / (2.0 * params.temperature);
    return DmAux{1.0 + std::exp(params.coupling / params.temperature) * std::cosh(x),
                 2.0 * params.coupling * std::cosh(x) + delta * std::sinh(x), delta,
                 std::atan(d)};
}

} // namespace qdc
