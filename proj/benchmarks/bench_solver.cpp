#include <benchmark/benchmark.h>

#include "fraclap/solver.hpp"

using namespace fraclap;

static void BM_Assemble(benchmark::State& state) {
  const Domain dom = Domain::interval(-1, 1);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble(dom, FracOrder(0.5), N).matrix.data());
  }
  state.SetComplexityN(N);
}
BENCHMARK(BM_Assemble)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_SolveDirichlet(benchmark::State& state) {
  const Domain dom = Domain::interval(-1, 1);
  const FunctionHandle g = FunctionHandle::constant(1.0);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_dirichlet(dom, FracOrder(0.5), g, N).achieved_residual);
  }
  state.SetComplexityN(N);
}
BENCHMARK(BM_SolveDirichlet)->RangeMultiplier(2)->Range(64, 2048)->Unit(benchmark::kMillisecond)->Complexity();

BENCHMARK_MAIN();
