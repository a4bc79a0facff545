#include "qdc/concurrence.hpp"
#include "qdc/dense_coding.hpp"
#include "qdc/spectral.hpp"
#include "qdc/spin_models.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

qdc::Matrix make_hermitian(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    qdc::Matrix m(4);
    for (int i = 0; i < 4; ++i) {
        m(i, i) = u(rng);
        for (int j = i + 1; j < 4; ++j) {
            const qdc::Complex z(u(rng), u(rng));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

void BM_JacobiEigendecompose(benchmark::State& state) {
    std::mt19937 rng(1);
    const qdc::Matrix m = make_hermitian(rng);
    for (auto _ : state) benchmark::DoNotOptimize(qdc::hermitian_eigendecompose(m));
}
BENCHMARK(BM_JacobiEigendecompose);

void BM_ThermalState(benchmark::State& state) {
    const qdc::ModelParams p{qdc::ModelKind::Xxz, 1.0, -0.5, 0.5};
    for (auto _ : state) benchmark::DoNotOptimize(qdc::thermal_state(p));
}
BENCHMARK(BM_ThermalState);

void BM_CapacityClosedXxz(benchmark::State& state) {
    const qdc::ModelParams p{qdc::ModelKind::Xxz, 1.0, -0.5, 0.5};
    for (auto _ : state) benchmark::DoNotOptimize(qdc::capacity_closed_xxz(p));
}
BENCHMARK(BM_CapacityClosedXxz);

void BM_CapacityGeneric(benchmark::State& state) {
    const qdc::ModelParams p{qdc::ModelKind::Dm, 1.0, 1.5, 0.5};
    const qdc::ThermalState ts = qdc::thermal_state(p);
    for (auto _ : state) benchmark::DoNotOptimize(qdc::capacity_generic(ts.rho));
}
BENCHMARK(BM_CapacityGeneric);

void BM_Concurrence(benchmark::State& state) {
    const qdc::ThermalState ts = qdc::thermal_state({qdc::ModelKind::Dm, 1.0, 1.5, 0.5});
    for (auto _ : state) benchmark::DoNotOptimize(qdc::concurrence(ts.rho));
}
BENCHMARK(BM_Concurrence);

} // namespace

BENCHMARK_MAIN();
