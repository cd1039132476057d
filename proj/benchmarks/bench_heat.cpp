#include <benchmark/benchmark.h>

#include "volheat/heat.hpp"

namespace {

void BM_FluxPotential(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(volheat::eval_U(1.0, 1.0, 1.0, steps));
  state.SetComplexityN(steps);
}
BENCHMARK(BM_FluxPotential)->Arg(250)->Arg(1000)->Arg(4000)->Complexity();

void BM_UProfile(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  const volheat::HeatSolution sol(1.0, 1.0, 1.0, steps);
  for (auto _ : state) benchmark::DoNotOptimize(sol.u_profile(0.5));
  state.SetComplexityN(steps);
}
BENCHMARK(BM_UProfile)->Arg(250)->Arg(1000)->Arg(4000)->Complexity();

void BM_PointValue(benchmark::State& state) {
  const volheat::HeatSolution sol(1.0, 1.0, 1.0, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(sol.u_at_index(0.5, 1000));
}
BENCHMARK(BM_PointValue);

}  // namespace

BENCHMARK_MAIN();
