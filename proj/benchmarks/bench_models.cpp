#include "clockvis/channels.hpp"
#include "clockvis/jaynes_cummings.hpp"
#include "clockvis/presets.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace clockvis;

static void BM_HermitianEig(benchmark::State& state) {
    const auto n = static_cast<Eigen::Index>(state.range(0));
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    ComplexMatrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
    }
    const ComplexMatrix h = 0.5 * (a + a.adjoint());
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig)->Arg(4)->Arg(8)->Arg(16)->Arg(64);

static void BM_JcAnalytic(benchmark::State& state) {
    const jc::JcParams p{1.0, 1.1, 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(jc::jc_visibility_analytic(p, 1.0));
}
BENCHMARK(BM_JcAnalytic);

static void BM_JcThermal(benchmark::State& state) {
    const jc::JcParams p{1.0, 1.1, 0.2};
    const jc::ThermalParams t{static_cast<double>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(jc::jc_thermal_visibility(p, t, 1.0));
}
BENCHMARK(BM_JcThermal)->Arg(1)->Arg(10);

static void BM_ChannelTwoArm(benchmark::State& state) {
    const auto kind = static_cast<channels::ChannelKind>(state.range(0));
    const ClockSpec clock = ClockSpec::with_gap(1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(channels::two_arm_visibility(clock, kind, {1.0, 0.3, 0.0}, {2.0, 0.1, 0.0}));
    }
}
BENCHMARK(BM_ChannelTwoArm)->DenseRange(0, 2);

static void BM_ComparePreset(benchmark::State& state) {
    const auto preset = sweep::figure_preset("compare-lambda");
    const sweep::RunOptions run{static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(sweep::run_preset(preset, run));
}
BENCHMARK(BM_ComparePreset)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
