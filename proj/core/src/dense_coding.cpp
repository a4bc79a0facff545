#include "qdc/dense_coding.hpp"

#include "qdc/concurrence.hpp"
#include "qdc/errors.hpp"
#include "qdc/qubits.hpp"

#include <algorithm>
#include <cmath>

namespace qdc {

namespace {

const double kLn4 = std::log(4.0);

void require_closed_form(const ModelParams& p, ModelKind kind) {
    if (p.kind != kind) throw WrongModelKindError("closed-form capacity: wrong model kind");
    if (!(p.temperature > 0.0)) throw InvalidTemperatureError("temperature must be > 0");
    if (p.coupling == 0.0) throw InvalidCouplingError("closed form requires J != 0");
}

double log_cosh(double x) {
    const double ax = std::abs(x);
    return ax + std::log1p(std::exp(-2.0 * ax)) - std::log(2.0);
}

// ln(1 + e^u) without overflow.
double log1p_exp(double u) {
    return u > 0.0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u));
}

} // namespace

EncodingEnsemble standard_ensemble() {
    std::array<Matrix, 4> u{Matrix(2), Matrix(2), Matrix(2), Matrix(2)};
    // U_i |x> = e^{i pi x a} |x + b mod 2> for (a,b) = (0,0),(1,0),(0,1),(1,1).
    const std::array<std::pair<int, int>, 4> ab{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
    for (int i = 0; i < 4; ++i) {
        const auto [a, b] = ab[i];
        for (int x = 0; x < 2; ++x) {
            const double sign = (a == 1 && x == 1) ? -1.0 : 1.0;
            u[i](qubit_index((x + b) % 2), qubit_index(x)) = sign;
        }
    }
    return EncodingEnsemble{std::move(u), {0.25, 0.25, 0.25, 0.25}};
}

DensityMatrix average_signal_state(const DensityMatrix& rho, const EncodingEnsemble& ens) {
    const Matrix id2 = Matrix::identity(2);
    Matrix avg(4);
    for (int i = 0; i < 4; ++i) {
        const Matrix lift = kron(ens.unitaries[i], id2);
        avg += Complex(ens.probabilities[i]) * (lift * rho.mat() * lift.adjoint());
    }
    return DensityMatrix(avg);
}

CapacityResult capacity_generic(const DensityMatrix& rho) {
    CapacityResult r;
    r.entropy_rho = von_neumann_entropy(rho);
    r.entropy_avg = von_neumann_entropy(average_signal_state(rho, standard_ensemble()));
    r.chi = r.entropy_avg - r.entropy_rho;
    r.concurrence = concurrence(rho);
    r.valid_for_dense_coding = r.chi > 1.0;
    return r;
}

double capacity_closed_xxz(const ModelParams& params) {
    require_closed_form(params, ModelKind::Xxz);
    const double bt = params.coupling / params.temperature;
    const double u = params.coupling * params.anisotropy / params.temperature + log_cosh(bt);
    const double ln_lambda = log1p_exp(u); // ln(1 + e^{J Delta/T} cosh(J/T))
    // 2 J xi e^{J Delta/T} / (T lambda), with xi factored through cosh(J/T).
    const double drive = 2.0 * params.coupling * (params.anisotropy + std::tanh(bt)) *
                         std::exp(u - ln_lambda) / params.temperature;
    // rounding can overshoot the ends by a few 1e-14 deep in the saturated limits
    return std::clamp((kLn4 - 2.0 * ln_lambda + drive) / kLn4, 0.0, 2.0);
}

double capacity_closed_dm(const ModelParams& params) {
    require_closed_form(params, ModelKind::Dm);
    const double d = params.anisotropy;
    const double delta = 2.0 * params.coupling * std::sqrt(1.0 + d * d);
    const double x = delta / (2.0 * params.temperature);
    const double u = params.coupling / params.temperature + log_cosh(x);
    const double ln_eta = log1p_exp(u); // ln(1 + e^{J/T} cosh(delta/2T))
    // zeta e^{J/T} / (T eta), zeta factored through cosh(delta/2T).
    const double drive = (2.0 * params.coupling + delta * std::tanh(x)) *
                         std::exp(u - ln_eta) / params.temperature;
    return std::clamp((kLn4 - 2.0 * ln_eta + drive) / kLn4, 0.0, 2.0);
}

double capacity_closed(const ModelParams& params) {
    return params.kind == ModelKind::Xxz ? capacity_closed_xxz(params)
                                         : capacity_closed_dm(params);
}

bool validity(const ModelParams& params) { return capacity_closed(params) > 1.0; }

double asymptotic_chi_large_anisotropy(double temperature) {
    if (!(temperature > 0.0)) throw InvalidTemperatureError("temperature must be > 0");
    const double t = temperature;
    // T ln(1 + e^{2/T}) rewritten as 2 + T ln(1 + e^{-2/T}).
    const double t_ln = 2.0 + t * std::log1p(std::exp(-2.0 / t));
    return (1.0 + t * kLn4 - t_ln + std::tanh(1.0 / t)) / (t * std::log(2.0));
}

std::vector<std::pair<double, double>> critical_temperature_scan(const ModelParams& params,
                                                                 double t_lo, double t_hi,
                                                                 double resolution) {
    if (!(t_lo > 0.0) || t_lo >= t_hi)
        throw InvalidBracketError("critical_temperature: need 0 < t_lo < t_hi");
    auto f = [&params](double t) {
        ModelParams p = params;
        p.temperature = t;
        return capacity_closed(p) - 1.0;
    };
    std::vector<std::pair<double, double>> intervals;
    double prev_t = t_lo;
    double prev_f = f(prev_t);
    for (double t = t_lo + resolution; prev_t < t_hi; t += resolution) {
        const double cur_t = std::min(t, t_hi);
        const double cur_f = f(cur_t);
        // Strict sign change only: chi saturates at exactly 1.0 in floats
        // deep in the invalid region, which is not a crossing.
        if (prev_f * cur_f < 0.0) intervals.emplace_back(prev_t, cur_t);
        prev_t = cur_t;
        prev_f = cur_f;
        if (cur_t >= t_hi) break;
    }
    return intervals;
}

std::optional<double> critical_temperature(const ModelParams& params, double t_lo,
                                           double t_hi) {
    const auto intervals = critical_temperature_scan(params, t_lo, t_hi);
    if (intervals.empty()) return std::nullopt;

    auto f = [&params](double t) {
        ModelParams p = params;
        p.temperature = t;
        return capacity_closed(p) - 1.0;
    };
    auto [lo, hi] = intervals.front(); // smallest root
    double f_lo = f(lo);
    if (f_lo == 0.0) return lo;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (std::abs(f_mid) <= 1e-10) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

CapacityResult evaluate(const ModelParams& params) {
    const ThermalState ts = thermal_state(params);
    CapacityResult r;
    r.params = params;
    r.concurrence = concurrence(ts.rho);
    r.entropy_avg = 2.0; // twirled signal ensemble of a thermal state is I/4
    if (params.coupling == 0.0) {
        r.chi = 0.0; // Gibbs state is I/4
        r.entropy_rho = 2.0;
    } else {
        r.chi = capacity_closed(params);
        r.entropy_rho = 2.0 - r.chi;
    }
    r.valid_for_dense_coding = r.chi > 1.0;
    return r;
}

} // namespace qdc
