#include <benchmark/benchmark.h>

#include "icbounds/channel.hpp"
#include "icbounds/inner.hpp"
#include "icbounds/outer.hpp"
#include "icbounds/region.hpp"
#include "icbounds/sumcap.hpp"

namespace {

const icbounds::Channel kFig2{0.09, 0.04, 10, 20};

void BM_constraint1_objective(benchmark::State& state) {
  const icbounds::outer::GeniePoint g{0.3, 0.2, 12.0, 7.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        icbounds::outer::constraint1_objective(kFig2, 1.0, g));
  }
}
BENCHMARK(BM_constraint1_objective);

void BM_constraint1_bound(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(icbounds::outer::constraint1_bound(kFig2, 1.0));
  }
}
BENCHMARK(BM_constraint1_bound)->Unit(benchmark::kMillisecond);

void BM_closed_form_genie(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(icbounds::sumcap::closed_form_genie(kFig2));
  }
}
BENCHMARK(BM_closed_form_genie);

void BM_outer_region_default_grid(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(icbounds::region::outer_region(kFig2));
  }
}
BENCHMARK(BM_outer_region_default_grid)->Unit(benchmark::kMillisecond);

void BM_symmetric_threshold(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(icbounds::symmetric_noisy_threshold(6.0));
  }
}
BENCHMARK(BM_symmetric_threshold);

void BM_best_inner_sum_rate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(icbounds::inner::best_inner_sum_rate(kFig2));
  }
}
BENCHMARK(BM_best_inner_sum_rate);

}  // namespace

BENCHMARK_MAIN();
