// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "rbl/constructions.hpp"
#include "rbl/energy.hpp"
#include "rbl/verifier.hpp"

namespace {

void BM_MinColorsParallel(benchmark::State& st) {
  const auto c = rbl::near_rainbow_pairs(static_cast<int>(st.range(0)), 2, 2).coloring;
  for (auto _ : st) benchmark::DoNotOptimize(rbl::min_colors_over_copies(c, 2, 3));
}

void BM_MinColorsNaive(benchmark::State& st) {
  const auto c = rbl::near_rainbow_pairs(static_cast<int>(st.range(0)), 2, 2).coloring;
  for (auto _ : st) benchmark::DoNotOptimize(rbl::reference::min_colors_naive(c, 2, 3));
}

void BM_VerifyParallel(benchmark::State& st) {
  const auto c = rbl::star_upper_i(static_cast<int>(st.range(0)), 5, 3).coloring;
  const auto spec = rbl::PatternSpec::make(1, 5, 3);
  for (auto _ : st) benchmark::DoNotOptimize(rbl::verify(c, spec));
}

void BM_VerifyNaive(benchmark::State& st) {
  const auto c = rbl::star_upper_i(static_cast<int>(st.range(0)), 5, 3).coloring;
  const auto spec = rbl::PatternSpec::make(1, 5, 3);
  for (auto _ : st) benchmark::DoNotOptimize(rbl::reference::verify_naive(c, spec));
}

void BM_EnergyParallel(benchmark::State& st) {
  const auto c = rbl::near_rainbow_pairs(static_cast<int>(st.range(0)), 2, 2).coloring;
  for (auto _ : st) benchmark::DoNotOptimize(rbl::build_energy(c, 2));
}

void BM_EnergyNaive(benchmark::State& st) {
  const auto c = rbl::near_rainbow_pairs(static_cast<int>(st.range(0)), 2, 2).coloring;
  for (auto _ : st) benchmark::DoNotOptimize(rbl::reference::build_energy_naive(c, 2));
}

}  // namespace

BENCHMARK(BM_MinColorsParallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinColorsNaive)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyNaive)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnergyParallel)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnergyNaive)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
