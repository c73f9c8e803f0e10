#include <benchmark/benchmark.h>

#include "koutgraph/analysis.hpp"
#include "koutgraph/deletion.hpp"
#include "koutgraph/graph.hpp"
#include "koutgraph/montecarlo.hpp"
#include "koutgraph/thresholds.hpp"

namespace {

using namespace kout;

void BM_SampleKOut(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto k = static_cast<std::uint32_t>(state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_kout(n, k, Seed{seed++}));
  }
  state.SetItemsProcessed(state.iterations() * n * k);
}
BENCHMARK(BM_SampleKOut)->Args({5000, 5})->Args({50000, 2})->Args({50000, 8});

void BM_SampleEr(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const double p = 2.0 * state.range(1) / n;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_er(n, p, Seed{seed++}));
  }
}
BENCHMARK(BM_SampleEr)->Args({5000, 5})->Args({50000, 5});

void BM_DeleteAndComponents(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto g = sample_kout(n, 4, Seed{1});
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto r = delete_uniform(g, DeletionSpec::fraction(0.5, Seed{seed++}));
    benchmark::DoNotOptimize(components(r));
  }
}
BENCHMARK(BM_DeleteAndComponents)->Arg(5000)->Arg(50000);

void BM_ComponentsDsuVsBfs(benchmark::State& state) {
  const auto g = sample_kout(50000, 2, Seed{3});
  const auto r = delete_uniform(g, DeletionSpec::count(1000, Seed{4}));
  const bool bfs = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bfs ? components_bfs(r.adjacency, r.survivors) : components(r));
  }
}
BENCHMARK(BM_ComponentsDsuVsBfs)->Arg(0)->Arg(1);

void BM_RunTrial(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_trial(KOutParams{n, 5}, DeletionSpec::fraction(0.4, Seed{seed}), Seed{seed + 1}));
    seed += 2;
  }
}
BENCHMARK(BM_RunTrial)->Arg(5000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_UnionBound(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(union_bound_pz(n, 8, n / 2));
  }
}
BENCHMARK(BM_UnionBound)->Arg(5000)->Arg(50000);

}  // namespace

BENCHMARK_MAIN();
