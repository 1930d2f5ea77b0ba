#include <benchmark/benchmark.h>

#include "roofcalc/bwb.hpp"
#include "roofcalc/lr.hpp"

namespace {

using roofcalc::Weight;

void BM_LrProductCold(benchmark::State& state) {
  const Weight a{4, 3, 2, 1, 0};
  const Weight b{3, 2, 2, 1, 0};
  for (auto _ : state) {
    roofcalc::clear_lr_cache();
    benchmark::DoNotOptimize(roofcalc::lr_product(a, b, 5));
  }
}
BENCHMARK(BM_LrProductCold);

void BM_LrProductWarm(benchmark::State& state) {
  const Weight a{4, 3, 2, 1, 0};
  const Weight b{3, 2, 2, 1, 0};
  for (auto _ : state) benchmark::DoNotOptimize(roofcalc::lr_product(a, b, 5));
}
BENCHMARK(BM_LrProductWarm);

void BM_Bott(benchmark::State& state) {
  const roofcalc::DoubleWeight w(Weight{3, 1, -2}, Weight{5, 2, 2, 0});
  for (auto _ : state) benchmark::DoNotOptimize(roofcalc::bott(w));
}
BENCHMARK(BM_Bott);

}  // namespace
