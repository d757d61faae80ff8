#include <benchmark/benchmark.h>

#include "arcbrick/arc.hpp"
#include "arcbrick/mutation.hpp"
#include "arcbrick/quotients.hpp"
#include "arcbrick/representation.hpp"
#include "arcbrick/string_hom.hpp"

using namespace arcbrick;

static void BM_EnumerateNad(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    for_each_nad(n, [&](std::span<const Arc>) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateNad)->DenseRange(3, 6);

static void BM_RnadCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(family_count(n, Family::Rnad));
}
BENCHMARK(BM_RnadCount)->DenseRange(4, 8, 2);

static void BM_HomDimAllPairs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto arcs = enumerate_arcs(n);
  std::vector<Representation> modules;
  for (const Arc& a : arcs) modules.push_back(arc_module(a, n));
  for (auto _ : state) {
    int total = 0;
    for (const auto& m : modules)
      for (const auto& k : modules) total += hom_dim(m, k);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_HomDimAllPairs)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_GraphMapAllPairs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto arcs = enumerate_arcs(n);
  for (auto _ : state) {
    int total = 0;
    for (const Arc& a : arcs)
      for (const Arc& b : arcs) total += graph_map_count(a, b);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_GraphMapAllPairs)->DenseRange(2, 5);

static void BM_MutateSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto perms = all_permutations(n);
  for (auto _ : state) {
    for (const auto& w : perms) {
      const auto d = double_diagram(w);
      for (int i = 1; i <= n; ++i) benchmark::DoNotOptimize(mutate_dad(d, i));
    }
  }
}
BENCHMARK(BM_MutateSweep)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_Hasse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hasse(n).edges.size());
}
BENCHMARK(BM_Hasse)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
