#include "fractoback/kernels.hpp"
#include "fractoback/mlf.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace fractoback;

static void BM_EvalSeries(benchmark::State& state) {
    const auto p = MLParams::make(1.8, {0.8, 0.4});
    const auto a = MLArguments::make({-0.5, -0.2});
    for (auto _ : state) benchmark::DoNotOptimize(mlf::eval(p, a));
}
BENCHMARK(BM_EvalSeries);

// |z1| = 10^range(0)
static void BM_EvalContour(benchmark::State& state) {
    const auto p = MLParams::make(1.8, {0.8, 0.4});
    const auto a = MLArguments::make({-std::pow(10.0, double(state.range(0))), -1.0});
    for (auto _ : state) benchmark::DoNotOptimize(mlf::eval(p, a));
}
BENCHMARK(BM_EvalContour)->DenseRange(1, 7, 2);

static void BM_EvalAsymptotic(benchmark::State& state) {
    const auto p = MLParams::make(1.8, {0.8, 0.4});
    const auto a = MLArguments::make({-1e10, -1.0});
    for (auto _ : state) benchmark::DoNotOptimize(mlf::eval(p, a));
}
BENCHMARK(BM_EvalAsymptotic);

static void BM_Relaxation(benchmark::State& state) {
    const auto o = FractionalOrders::make({0.9, 0.6, 0.3}, {1, 0.5, 0.25});
    const double lambda = std::pow(10.0, double(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(relaxation(o, lambda, 1.0));
}
BENCHMARK(BM_Relaxation)->DenseRange(-2, 6, 2);

static void BM_RelaxationTalbot(benchmark::State& state) {
    const auto o = FractionalOrders::make({0.9, 0.6, 0.3}, {1, 0.5, 0.25});
    for (auto _ : state) benchmark::DoNotOptimize(relaxation_oracle(o, 100.0, 1.0));
}
BENCHMARK(BM_RelaxationTalbot);

BENCHMARK_MAIN();
