#pragma once

#include "qdc/density.hpp"
#include "qdc/spin_models.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace qdc {

/// The four mutually orthogonal single-qubit encodings and their (equal)
/// prior probabilities.
struct EncodingEnsemble {
    std::array<Matrix, 4> unitaries;
    std::array<double, 4> probabilities;
};

/// Capacity and related quantities at one parameter point. All entropies
/// are in bits; valid_for_dense_coding <=> chi > 1.
struct CapacityResult {
    double chi = 0.0;
    double entropy_rho = 0.0;
    double entropy_avg = 0.0;
    double concurrence = 0.0;
    bool valid_for_dense_coding = false;
    ModelParams params{};
};

/// U00 = I, U10 = phase flip, U01 = bit flip, U11 = both; priors 1/4 each.
EncodingEnsemble standard_ensemble();

/// (1/4) sum_i (U_i x I) rho (U_i^dag x I); equals I/2 tensor tr_1(rho).
DensityMatrix average_signal_state(const DensityMatrix& rho, const EncodingEnsemble& ens);

/// chi = S(average signal state) - S(rho), everything computed numerically.
/// Fills concurrence as well; params is left default.
CapacityResult capacity_generic(const DensityMatrix& rho);

/// Closed-form capacities. Evaluated in the log domain, so arbitrarily
/// large |Delta|, |D| or 1/T do not overflow.
double capacity_closed_xxz(const ModelParams& params);
double capacity_closed_dm(const ModelParams& params);
double capacity_closed(const ModelParams& params);

/// True iff the closed-form chi exceeds 1 (strict float comparison).
bool validity(const ModelParams& params);

/// chi in the |Delta| -> infinity limit (J = +1, Delta -> +inf, or the
/// mirrored FM case).
double asymptotic_chi_large_anisotropy(double temperature);

/// Smallest T* in [t_lo, t_hi] with chi(T*) = 1, to |chi - 1| <= 1e-10;
/// nullopt when chi - 1 has no sign change. params.temperature is ignored.
std::optional<double> critical_temperature(const ModelParams& params, double t_lo,
                                           double t_hi);

/// All sign-change intervals of chi(T) - 1 at the given scan resolution.
std::vector<std::pair<double, double>> critical_temperature_scan(const ModelParams& params,
                                                                 double t_lo, double t_hi,
                                                                 double resolution = 1e-3);

/// Full record for one parameter point: closed-form chi (generic pipeline
/// at J = 0, where the Gibbs state is I/4 and chi = 0), thermal-state
/// concurrence, validity.
CapacityResult evaluate(const ModelParams& params);

} // namespace qdc
