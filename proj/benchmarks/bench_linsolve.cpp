#include <vector>

#include "benchmark/benchmark.h"
#include "swm/linsolve.hpp"
#include "swm/series_gen.hpp"

namespace {

std::vector<double> random_rhs(std::size_t n) {
  return swm::generate(7, n, swm::GridSpec::from_delta_t(n, 1.0)).series.values();
}

// Matrix-free product: n^2 additions, no stored matrix.
void BM_ApplySignMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const swm::SignPattern pattern(n);
  const std::vector<double> x = random_rhs(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(swm::apply_sign_matrix(pattern, x));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApplySignMatrix)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void BM_AssembleDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const swm::SignPattern pattern(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(swm::assemble_dense(pattern));
  }
}
BENCHMARK(BM_AssembleDense)->RangeMultiplier(4)->Range(64, 4096);

void BM_Factorize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const swm::SignPattern pattern(n);
  for (auto _ : state) {
    state.PauseTiming();
    swm::DenseMatrix a = swm::assemble_dense(pattern);
    state.ResumeTiming();
    benchmark::DoNotOptimize(swm::LuFactorization::factorize(std::move(a), 1e-9));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Factorize)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNCubed)
    ->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const swm::SignPattern pattern(n);
  const std::vector<double> rhs = random_rhs(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(swm::solve(pattern, rhs));
  }
}
BENCHMARK(BM_Solve)->Arg(256)->Arg(1024)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
