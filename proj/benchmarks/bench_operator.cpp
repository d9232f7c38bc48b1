#include <benchmark/benchmark.h>

#include <cmath>

#include "fraclap/closed_forms.hpp"
#include "fraclap/norms.hpp"
#include "fraclap/operator.hpp"

using namespace fraclap;

static void BM_FracLaplacianBall1D(benchmark::State& state) {
  const FracOrder s(0.5);
  const FunctionHandle u = ball_solution(1, s);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(frac_laplacian(u, 1, s, Point(x)));
    x = x > 0.9 ? -0.9 : x + 0.01;
  }
}
BENCHMARK(BM_FracLaplacianBall1D);

static void BM_FracLaplacianBall2D(benchmark::State& state) {
  const FracOrder s(0.5);
  const FunctionHandle u = ball_solution(2, s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(frac_laplacian(u, 2, s, Point(0.4, 0.0)));
  }
}
BENCHMARK(BM_FracLaplacianBall2D)->Unit(benchmark::kMillisecond);

static void BM_FracLaplacianGaussianTail(benchmark::State& state) {
  const FracOrder s(0.3);
  const FunctionHandle g = FunctionHandle::on_line([](double x) { return std::exp(-x * x); });
  for (auto _ : state) {
    benchmark::DoNotOptimize(frac_laplacian(g, 1, s, Point(0.25)));
  }
}
BENCHMARK(BM_FracLaplacianGaussianTail);

static void BM_BilinearForm(benchmark::State& state) {
  const FracOrder s(0.4);
  const FunctionHandle u = ball_solution(1, s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bilinear_I(u, u, 1, s, Point(0.3)));
  }
}
BENCHMARK(BM_BilinearForm);

static void BM_SupersolutionCalibration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(supersolution_phi1(n, FracOrder(0.5)).amplitude);
  }
}
BENCHMARK(BM_SupersolutionCalibration)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_HolderSeminorm(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const GridFunction f =
      GridFunction::sample_closed(Domain::interval(0, 1), N, [](double x) { return std::sqrt(x); });
  for (auto _ : state) {
    benchmark::DoNotOptimize(holder_seminorm(f, 0.5).value);
  }
  state.SetComplexityN(N);
}
BENCHMARK(BM_HolderSeminorm)->RangeMultiplier(4)->Range(256, 4096)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
