#include "fractoback/backward.hpp"
#include "fractoback/forward.hpp"

#include <benchmark/benchmark.h>

using namespace fractoback;

namespace {
const auto kOrders = FractionalOrders::make({0.8, 0.4}, {1, 1});
}

static void BM_ConvolveConstant(benchmark::State& state) {
    const double lambda = double(state.range(0));
    std::size_t evals = 0;
    for (auto _ : state) {
        const auto r = convolve_source(kOrders, lambda, [](double) { return 1.0; }, 1.0);
        evals = r.kernel_evaluations;
        benchmark::DoNotOptimize(r);
    }
    state.counters["kernel_evals"] = double(evals);
}
BENCHMARK(BM_ConvolveConstant)->Arg(1)->Arg(100)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_ForwardHomogeneous(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(n);
    const auto phi = random_band_limited(n, n, 1);
    const double times[] = {0.1, 0.5, 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(forward_solve(op, kOrders, phi, SourceTerm::zero(n), times));
}
BENCHMARK(BM_ForwardHomogeneous)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_RoundTripWithSource(benchmark::State& state) {
    const std::size_t n = 32;
    const auto op = DiagonalOperator::dirichlet_laplacian_1d(n);
    const auto phi = random_band_limited(n, n, 1);
    const auto f = SourceTerm::separable(random_band_limited(n, 8, 2), TimeProfile::polynomial({1, 1}));
    const double T[] = {1.0};
    for (auto _ : state) {
        const auto Phi = forward_solve(op, kOrders, phi, f, T).states[0];
        benchmark::DoNotOptimize(backward_solve({op, kOrders, 1.0, Phi, f}));
    }
}
BENCHMARK(BM_RoundTripWithSource)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
