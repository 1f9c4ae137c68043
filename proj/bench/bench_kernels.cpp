// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "bigramsey/verify.hpp"
#include "bigramsey/witness.hpp"

using namespace bigramsey;

static void BM_RealizedColorsSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Coloring chi = chi_star_strict(n, 3);
  const Leveled levels{spread(FiniteChain::iota(3 * (n + 2)), 3)};
  for (auto _ : state) benchmark::DoNotOptimize(realized_colors_serial(chi, levels));
}

static void BM_RealizedColorsParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Coloring chi = chi_star_strict(n, 3);
  const Leveled levels{spread(FiniteChain::iota(3 * (n + 2)), 3)};
  for (auto _ : state) benchmark::DoNotOptimize(realized_colors(chi, levels));
}

static void BM_FiniteOracleSerial(benchmark::State& state) {
  const auto c = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(finite_degree_oracle_serial(c, 2, 2));
}

static void BM_FiniteOracleParallel(benchmark::State& state) {
  const auto c = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(finite_degree_oracle(c, 2, 2));
}

BENCHMARK(BM_RealizedColorsSerial)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RealizedColorsParallel)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FiniteOracleSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FiniteOracleParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
