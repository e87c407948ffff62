// Microbenchmarks for the hot paths: full census, cubic solve, one Newton
// refinement, surface sampling, and a small component estimate.

#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>

#include "powsum/cubic.hpp"
#include "powsum/enumerate.hpp"
#include "powsum/topology.hpp"
#include "powsum/verify.hpp"

namespace {

void BM_Analyze(benchmark::State& state) {
  const powsum::SurfaceSpec spec{.c = 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(powsum::analyze(spec));
  }
}
BENCHMARK(BM_Analyze);

void BM_CubicSolve(benchmark::State& state) {
  const double bound = 1.0 / std::sqrt(5.0);
  double c = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        powsum::solve_depressed_cubic_on_interval(15.0, -1.5, c, -bound, bound));
    c = -c;  // alternate sign so the branch predictor cannot settle
  }
}
BENCHMARK(BM_CubicSolve);

void BM_NewtonSolve(benchmark::State& state) {
  const powsum::SurfaceSpec spec{.c = 0.1};
  const powsum::Point5 start = powsum::random_surface_point(spec, 7u);
  const powsum::KktState init{start, powsum::fit_multipliers(start)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(powsum::newton_solve(init, spec));
  }
}
BENCHMARK(BM_NewtonSolve);

void BM_RandomSurfacePoint(benchmark::State& state) {
  const powsum::SurfaceSpec spec{.c = 0.1};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(powsum::random_surface_point(spec, seed++));
  }
}
BENCHMARK(BM_RandomSurfacePoint);

void BM_ComponentCount(benchmark::State& state) {
  const powsum::SurfaceSpec spec{.c = 0.4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        powsum::component_count(spec, static_cast<int>(state.range(0)), 0.15,
                                1u));
  }
}
BENCHMARK(BM_ComponentCount)->Arg(500)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
