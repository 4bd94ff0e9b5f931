#include "benchmark/benchmark.h"
#include "swm/series_gen.hpp"
#include "swm/transform.hpp"

namespace {

void BM_ForwardGolden(benchmark::State& state) {
  const swm::TimeSeries series({84, -152, 63, 98, -35, 0, 145, -14},
                               swm::GridSpec::from_delta_t(8, 2.0), "mV");
  for (auto _ : state) {
    benchmark::DoNotOptimize(swm::forward(series));
  }
}
BENCHMARK(BM_ForwardGolden);

void BM_Inverse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto grid = swm::GridSpec::from_delta_t(n, 1.0);
  const auto generated = swm::generate(3, n, grid);
  const swm::Spectrum spectrum =
      swm::Spectrum::from_coefficients(grid, generated.series.values());
  for (auto _ : state) {
    benchmark::DoNotOptimize(swm::inverse(spectrum));
  }
}
BENCHMARK(BM_Inverse)->RangeMultiplier(4)->Range(64, 4096);

void BM_Generate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto grid = swm::GridSpec::from_sampling_rate(n, 2000.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(swm::generate(42, n, grid));
  }
}
BENCHMARK(BM_Generate)->Arg(10000);

}  // namespace
