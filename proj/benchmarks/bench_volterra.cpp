#include <benchmark/benchmark.h>

#include "volheat/volterra.hpp"

namespace {

void BM_KernelMoments(benchmark::State& state) {
  const int lags = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        volheat::kernel_moments(volheat::Kernel::sqrt_s, 1e-3, lags));
  state.SetComplexityN(lags);
}
BENCHMARK(BM_KernelMoments)->Arg(1000)->Arg(4000)->Complexity();

void BM_Solve(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(volheat::solve_volterra(1.0, 1.0, steps));
  state.SetComplexityN(steps);
}
BENCHMARK(BM_Solve)->Arg(250)->Arg(1000)->Arg(4000)->Complexity();

void BM_Residual(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  const volheat::GridFunction y = volheat::solve_volterra(1.0, 1.0, steps);
  for (auto _ : state)
    benchmark::DoNotOptimize(volheat::volterra_residual(y, 1.0));
  state.SetComplexityN(steps);
}
BENCHMARK(BM_Residual)->Arg(250)->Arg(1000)->Arg(4000)->Complexity();

}  // namespace

BENCHMARK_MAIN();
