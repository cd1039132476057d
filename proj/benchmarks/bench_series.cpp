#include <benchmark/benchmark.h>

#include "volheat/series.hpp"

namespace {

void BM_EvalY(benchmark::State& state) {
  const double lambda = static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(volheat::eval_y(lambda, 1.0, 1e-12).value);
}
BENCHMARK(BM_EvalY)->Arg(1)->Arg(5);

void BM_EvalThirdDerivative(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        volheat::eval_y_derivative(1.0, 0.5, 3, 1e-12).value);
}
BENCHMARK(BM_EvalThirdDerivative);

void BM_SampleY(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(volheat::sample_y(1.0, 1.0, steps, 1e-10));
  state.SetComplexityN(steps);
}
BENCHMARK(BM_SampleY)->Arg(250)->Arg(1000)->Arg(4000)->Complexity();

}  // namespace

BENCHMARK_MAIN();
