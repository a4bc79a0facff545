#include "qdc/dense_coding.hpp"
#include "qdc/errors.hpp"
#include "qdc/qubits.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qdc;

namespace {

ModelParams xxz(double j, double delta, double t) { return {ModelKind::Xxz, j, delta, t}; }
ModelParams dm(double j, double d, double t) { return {ModelKind::Dm, j, d, t}; }

const double kLog2Of3 = std::log2(3.0);

} // namespace

TEST_CASE("standard ensemble matches its defining action") {
    const EncodingEnsemble ens = standard_ensemble();
    CHECK(max_abs_diff(ens.unitaries[0], Matrix::identity(2)) == 0.0);

    // phase flip: |0> fixed, |1> negated
    const Matrix& u10 = ens.unitaries[1];
    Vector v = matvec(u10, qubit_ket(0));
    CHECK(std::abs(v[qubit_index(0)] - Complex(1.0)) == 0.0);
    v = matvec(u10, qubit_ket(1));
    CHECK(std::abs(v[qubit_index(1)] - Complex(-1.0)) == 0.0);

    // bit flip
    v = matvec(ens.unitaries[2], qubit_ket(0));
    CHECK(std::abs(v[qubit_index(1)] - Complex(1.0)) == 0.0);

    for (double p : ens.probabilities) CHECK(p == 0.25);
}

TEST_CASE("ensemble unitaries are mutually orthogonal and unitary") {
    const EncodingEnsemble ens = standard_ensemble();
    for (int i = 0; i < 4; ++i) {
        CHECK(max_abs_diff(ens.unitaries[i].adjoint() * ens.unitaries[i],
                           Matrix::identity(2)) <= 1e-12);
        for (int j = 0; j < 4; ++j) {
            const Complex t = (ens.unitaries[i].adjoint() * ens.unitaries[j]).trace();
            CHECK(std::abs(t - (i == j ? Complex(2.0) : Complex(0.0))) <= 1e-12);
        }
    }
    CHECK(std::abs((ens.unitaries[2].adjoint() * ens.unitaries[3]).trace()) <= 1e-12);
}

TEST_CASE("average signal state of thermal inputs is maximally mixed") {
    const EncodingEnsemble ens = standard_ensemble();
    const Matrix quarter = Complex(0.25) * Matrix::identity(4);
    CHECK(max_abs_diff(
              average_signal_state(thermal_state(xxz(1.0, 0.5, 0.5)).rho, ens).mat(),
              quarter) <= 1e-12);
    CHECK(max_abs_diff(average_signal_state(DensityMatrix(quarter), ens).mat(), quarter) <=
          1e-12);
}

TEST_CASE("average signal state of |00><00|") {
    const DensityMatrix avg =
        average_signal_state(DensityMatrix(outer(two_qubit_ket(0, 0))), standard_ensemble());
    const Matrix expect = kron(Complex(0.5) * Matrix::identity(2), outer(qubit_ket(0)));
    CHECK(max_abs_diff(avg.mat(), expect) <= 1e-12);
}

TEST_CASE("twirl identity on 1000 random density matrices") {
    const EncodingEnsemble ens = standard_ensemble();
    std::mt19937 rng(31415);
    double worst = 0.0;
    for (int iter = 0; iter < 1000; ++iter) {
        const DensityMatrix rho = qdc::testing::random_density(rng);
        const Matrix lhs = average_signal_state(rho, ens).mat();
        const Matrix rhs =
            kron(Complex(0.5) * Matrix::identity(2), partial_trace_first(rho));
        worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("generic capacity of reference states") {
    CHECK(capacity_generic(DensityMatrix(outer(epr_ket(-1)))).chi ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(capacity_generic(DensityMatrix(Complex(0.25) * Matrix::identity(4))).chi ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(capacity_generic(ground_state_mixture({ModelKind::Xxz, 1.0, -1.0, 0.0})).chi ==
          doctest::Approx(2.0 - kLog2Of3).epsilon(1e-12));
}

TEST_CASE("generic capacity satisfies its own bookkeeping") {
    std::mt19937 rng(555);
    for (int iter = 0; iter < 50; ++iter) {
        const CapacityResult r = capacity_generic(qdc::testing::random_density(rng));
        CHECK(r.chi == r.entropy_avg - r.entropy_rho); // exact, computed as this difference
        CHECK(r.valid_for_dense_coding == (r.chi > 1.0));
    }
}

TEST_CASE("closed-form XXZ capacity near zero temperature") {
    CHECK(std::abs(capacity_closed_xxz(xxz(1.0, 0.0, 0.005)) - 2.0) < 1e-12);
    CHECK(std::abs(capacity_closed_xxz(xxz(-1.0, 0.0, 0.005)) - 2.0) < 1e-12);
}

TEST_CASE("closed-form XXZ capacity is symmetric under (J,Delta) -> (-J,-Delta)") {
    for (int ji = 0; ji < 21; ++ji) {
        const double j = -2.0 + 4.0 * ji / 20.0;
        if (j == 0.0) continue;
        for (int ai = 0; ai < 21; ++ai) {
            const double a = -3.0 + 6.0 * ai / 20.0;
            for (double t : {0.05, 0.5, 2.0})
                CHECK(std::abs(capacity_closed_xxz(xxz(j, a, t)) -
                               capacity_closed_xxz(xxz(-j, -a, t))) <= 1e-12);
        }
    }
}

TEST_CASE("strongly anisotropic AFM XXZ never beats one classical bit") {
    for (double t : {0.05, 0.2, 0.5, 1.0, 2.0})
        CHECK(capacity_closed_xxz(xxz(1.0, -2.0, t)) < 1.0);
}

TEST_CASE("closed-form capacities agree with the generic pipeline") {
    double worst = 0.0;
    for (int ji = 0; ji < 5; ++ji) {
        const double j = (ji - 2) ? (ji - 2.0) : 0.5; // skip J=0
        for (int ai = 0; ai < 7; ++ai) {
            const double a = -3.0 + ai;
            for (double t : {0.02, 0.1, 0.5, 1.0, 5.0}) {
                for (ModelKind kind : {ModelKind::Xxz, ModelKind::Dm}) {
                    const ModelParams p{kind, j, a, t};
                    const double closed = capacity_closed(p);
                    const double generic = capacity_generic(thermal_state(p).rho).chi;
                    worst = std::max(worst, std::abs(closed - generic));
                }
            }
        }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("closed-form DM capacity reduces to XXZ at D=0") {
    CHECK(std::abs(capacity_closed_dm(dm(1.0, 0.0, 0.5)) -
                   capacity_closed_xxz(xxz(1.0, 1.0, 0.5))) <= 1e-12);
}

TEST_CASE("strong DM interaction saturates the capacity") {
    CHECK(std::abs(capacity_closed_dm(dm(1.0, 50.0, 0.5)) - 2.0) <= 1e-6);
    CHECK(std::abs(capacity_closed_dm(dm(-1.0, 50.0, 0.5)) - 2.0) <= 1e-6);
}

TEST_CASE("FM DM capacity at D=0 drops to the triple-mixture value at low T") {
    CHECK(std::abs(capacity_closed_dm(dm(-1.0, 0.0, 1e-3)) - (2.0 - kLog2Of3)) <= 1e-3);
}

TEST_CASE("closed forms reject bad parameters") {
    CHECK_THROWS_AS(capacity_closed_xxz(xxz(1.0, 0.0, 0.0)), InvalidTemperatureError);
    CHECK_THROWS_AS(capacity_closed_xxz(dm(1.0, 0.0, 1.0)), WrongModelKindError);
    CHECK_THROWS_AS(capacity_closed_dm(xxz(1.0, 0.0, 1.0)), WrongModelKindError);
    CHECK_THROWS_AS(capacity_closed_xxz(xxz(0.0, 0.0, 1.0)), InvalidCouplingError);
}

TEST_CASE("validity examples") {
    CHECK(validity(xxz(1.0, 0.0, 0.1)));
    CHECK_FALSE(validity(xxz(1.0, -2.0, 0.5)));
    CHECK_FALSE(validity(dm(-1.0, 0.0, 0.3)));
}

TEST_CASE("validity equals the closed-form inequality") {
    // independent oracle: J xi e^{J Delta/T} > T lambda ln lambda (XXZ) and
    // zeta e^{J/T} > 2 T eta ln eta (DM), evaluated directly
    for (int ji = 0; ji < 9; ++ji) {
        const double j = -2.0 + 0.5 * ji;
        if (j == 0.0) continue;
        for (int ai = 0; ai < 13; ++ai) {
            const double a = -3.0 + 0.5 * ai;
            for (double t : {0.1, 0.5, 1.0, 3.0}) {
                {
                    const ModelParams p = xxz(j, a, t);
                    const XxzAux aux = xxz_aux(p);
                    const bool oracle = j * aux.xi * std::exp(j * a / t) >
                                        t * aux.lambda * std::log(aux.lambda);
                    CHECK(validity(p) == oracle);
                }
                {
                    const ModelParams p = dm(j, a, t);
                    const DmAux aux = dm_aux(p);
                    const bool oracle =
                        aux.zeta * std::exp(j / t) > 2.0 * t * aux.eta * std::log(aux.eta);
                    CHECK(validity(p) == oracle);
                }
            }
        }
    }
}

TEST_CASE("capacity range is [0, 2]") {
    for (int ji = 0; ji < 9; ++ji) {
        const double j = -2.0 + 0.5 * ji;
        if (j == 0.0) continue;
        for (int ai = 0; ai < 13; ++ai) {
            const double a = -3.0 + 0.5 * ai;
            for (double t : {0.02, 0.3, 1.0, 5.0}) {
                for (ModelKind kind : {ModelKind::Xxz, ModelKind::Dm}) {
                    const double chi = capacity_closed({kind, j, a, t});
                    CHECK(chi >= 0.0);
                    CHECK(chi <= 2.0 + 1e-15);
                }
            }
        }
    }
}

TEST_CASE("large-anisotropy asymptote") {
    CHECK(std::abs(asymptotic_chi_large_anisotropy(1e-4) - 2.0) <= 1e-6);
    CHECK(std::abs(asymptotic_chi_large_anisotropy(0.5) -
                   capacity_closed_xxz(xxz(1.0, 1000.0, 0.5))) <= 1e-4);
    for (double t : {0.01, 0.1, 1.0, 10.0, 100.0})
        CHECK(asymptotic_chi_large_anisotropy(t) > 1.0);
    CHECK_THROWS_AS(asymptotic_chi_large_anisotropy(0.0), InvalidTemperatureError);
}

TEST_CASE("convergence to the asymptote for Delta >= 200") {
    for (double delta : {200.0, 500.0})
        for (double t : {0.1, 0.5, 1.0, 2.0})
            CHECK(std::abs(capacity_closed_xxz(xxz(1.0, delta, t)) -
                           asymptotic_chi_large_anisotropy(t)) <= 1e-3);
}

TEST_CASE("critical temperature") {
    CHECK_FALSE(critical_temperature(xxz(1.0, -2.0, 0.0), 0.01, 10.0).has_value());

    const auto t1 = critical_temperature(xxz(1.0, 1.0, 0.0), 1e-3, 20.0);
    const auto t0 = critical_temperature(xxz(1.0, 0.0, 0.0), 1e-3, 20.0);
    REQUIRE(t1);
    REQUIRE(t0);
    CHECK(*t1 > *t0);
    CHECK(std::abs(capacity_closed_xxz(xxz(1.0, 1.0, *t1)) - 1.0) <= 1e-10);

    const auto d5 = critical_temperature(dm(1.0, 5.0, 0.0), 1e-3, 20.0);
    const auto d1 = critical_temperature(dm(1.0, 1.0, 0.0), 1e-3, 20.0);
    REQUIRE(d5);
    REQUIRE(d1);
    CHECK(*d5 > *d1);

    CHECK_THROWS_AS(critical_temperature(xxz(1.0, 0.0, 0.0), 1.0, 0.5), InvalidBracketError);
}

TEST_CASE("entanglement without dense-coding usability exists for FM DM") {
    int witnesses = 0;
    for (int i = 1; i <= 19; ++i) {
        const double d = i / 20.0;
        const CapacityResult r = evaluate(dm(-1.0, d, 0.5));
        if (r.concurrence > 0.01 && r.chi < 1.0) ++witnesses;
    }
    CHECK(witnesses > 0);
}

TEST_CASE("evaluate handles the J=0 degenerate point") {
    const CapacityResult r = evaluate(xxz(0.0, 1.0, 0.5));
    CHECK(r.chi == 0.0);
    CHECK(r.entropy_rho == 2.0);
    CHECK_FALSE(r.valid_for_dense_coding);
}
