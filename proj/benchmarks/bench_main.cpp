#include <benchmark/benchmark.h>

#include "hyperchrom/coloring.hpp"
#include "hyperchrom/qk.hpp"
#include "hyperchrom/rng.hpp"
#include "hyperchrom/sampler.hpp"
#include "hyperchrom/theory.hpp"

namespace {

using namespace hyperchrom;

void BM_SampleRegular(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto d = static_cast<std::uint32_t>(state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(++seed);
    benchmark::DoNotOptimize(sample_regular(n, d, 3, rng));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * d / 3));
}
BENCHMARK(BM_SampleRegular)->Args({3000, 6})->Args({3000, 30})->Args({3000, 99})
    ->Unit(benchmark::kMillisecond);

void BM_GreedyColor(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  const Hypergraph h = sample_regular(n, 30, 3, rng).hypergraph;
  const auto order = random_order(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_color(h, order));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(h.num_edges()));
}
BENCHMARK(BM_GreedyColor)->Arg(3000)->Arg(30000)->Unit(benchmark::kMillisecond);

void BM_QkDistribution(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto a = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(qk_distribution(r, a));
}
BENCHMARK(BM_QkDistribution)->Args({3, 10})->Args({3, 1000})->Args({5, 1000})->Args({8, 100000});

void BM_SolveZ2(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  double c = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(theory::solve_z2(r, c));
    c = c < 0.5 ? c * 1.01 : 0.01;
  }
}
BENCHMARK(BM_SolveZ2)->Arg(3)->Arg(5);

void BM_FirstMomentValue(benchmark::State& state) {
  double d = 100;
  for (auto _ : state) {
    benchmark::DoNotOptimize(theory::first_moment_value(3, d, 0.1));
    d = d < 1e9 ? d * 1.5 : 100;
  }
}
BENCHMARK(BM_FirstMomentValue);

}  // namespace

BENCHMARK_MAIN();
