#include <benchmark/benchmark.h>

#include "roofcalc/hodge.hpp"
#include "roofcalc/windows.hpp"

namespace {

void BM_Pair(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  roofcalc::HodgeOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(roofcalc::compute_pair(k, n, opts));
}
BENCHMARK(BM_Pair)->Args({1, 6})->Args({2, 6})->Args({3, 7})->Unit(benchmark::kMillisecond);

void BM_TiltingPlus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(roofcalc::check_tilting_plus(n, 8, 1));
  }
}
BENCHMARK(BM_TiltingPlus)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
