#include <benchmark/benchmark.h>

#include <numbers>

#include "rfbeats/rfbeats.hpp"

using namespace rfbeats;

namespace {

PhysParams strong_field() {
    PhysParams p;
    p.omega = 9.0;
    p.delta_z = -8.0;
    return p;
}

void BM_BuildLiouvillian(benchmark::State& state) {
    const auto p = strong_field();
    for (auto _ : state) benchmark::DoNotOptimize(build_liouvillian(p));
}
BENCHMARK(BM_BuildLiouvillian);

void BM_EigDecompose(benchmark::State& state) {
    const auto m = build_liouvillian(strong_field());
    for (auto _ : state) benchmark::DoNotOptimize(numerics::eig_decompose(m));
}
BENCHMARK(BM_EigDecompose);

void BM_SteadyClosedForm(benchmark::State& state) {
    const auto p = strong_field();
    for (auto _ : state) benchmark::DoNotOptimize(steady_state(p));
}
BENCHMARK(BM_SteadyClosedForm);

void BM_SteadyNumeric(benchmark::State& state) {
    const auto p = strong_field();
    for (auto _ : state) benchmark::DoNotOptimize(steady_state_numeric(p));
}
BENCHMARK(BM_SteadyNumeric);

void BM_Evolve(benchmark::State& state) {
    const System sys(strong_field());
    const auto r0 = initial_state(sys, InitialPreset::Ground3);
    const auto times = numerics::linspace(0, 20, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(evolve(sys, r0, times));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Evolve)->Arg(200)->Arg(2000)->Arg(20000);

void BM_DenseExpAction(benchmark::State& state) {
    const auto m = build_liouvillian(strong_field());
    const auto v = steady_state(strong_field()).alpha.values();
    for (auto _ : state) benchmark::DoNotOptimize(numerics::mat_exp_action_dense(m, 3.7, v));
}
BENCHMARK(BM_DenseExpAction);

void BM_G2(benchmark::State& state) {
    const System sys(strong_field());
    const auto taus = numerics::linspace(0, 10, 4000);
    for (auto _ : state) benchmark::DoNotOptimize(g2(sys, taus));
}
BENCHMARK(BM_G2);

void BM_Aic(benchmark::State& state) {
    const System sys(strong_field());
    const auto taus = numerics::linspace(0, 5, 2000);
    for (auto _ : state) benchmark::DoNotOptimize(aic(sys, std::numbers::pi / 2.0, taus));
}
BENCHMARK(BM_Aic);

void BM_IncoherentSpectrum(benchmark::State& state) {
    const System sys(strong_field());
    const auto omegas = numerics::linspace(-30, 30, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(incoherent_spectrum(sys, omegas));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IncoherentSpectrum)->Arg(201)->Arg(2001)->Arg(20001);

void BM_QuadratureSpectra(benchmark::State& state) {
    const System sys(strong_field());
    const auto omegas = numerics::linspace(-30, 30, 3001);
    for (auto _ : state) {
        benchmark::DoNotOptimize(quadrature_spectra(sys, std::numbers::pi / 2.0, omegas));
    }
}
BENCHMARK(BM_QuadratureSpectra);

void BM_VarianceReport(benchmark::State& state) {
    PhysParams p;
    p.omega = 0.3;
    for (auto _ : state) benchmark::DoNotOptimize(variance(p, std::numbers::pi / 2.0));
}
BENCHMARK(BM_VarianceReport);

}  // namespace

BENCHMARK_MAIN();
