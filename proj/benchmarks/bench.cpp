#include <benchmark/benchmark.h>

#include "korbit/closure.hpp"
#include "korbit/oracle.hpp"
#include "korbit/orbit_graph.hpp"
#include "korbit/weyl.hpp"

using namespace korbit;

static void BM_EnumerateClans(benchmark::State& state) {
  const RealFormSpec spec{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_clans(spec));
}
BENCHMARK(BM_EnumerateClans)->Args({2, 2})->Args({3, 3})->Args({4, 4});

static void BM_WeakOrderBuild(benchmark::State& state) {
  const RealFormSpec spec{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(WeakOrderGraph::build(spec));
}
BENCHMARK(BM_WeakOrderBuild)->Args({2, 2})->Args({3, 2})->Args({3, 3});

static void BM_ClosureOrder(benchmark::State& state) {
  const RealFormSpec spec{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  const WeakOrderGraph graph = WeakOrderGraph::build(spec);
  for (auto _ : state) benchmark::DoNotOptimize(closure_order(graph));
}
BENCHMARK(BM_ClosureOrder)->Args({2, 2})->Args({3, 2})->Args({3, 3});

static void BM_DemazureFoldAll(benchmark::State& state) {
  const RealFormSpec spec{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  const WeakOrderGraph graph = WeakOrderGraph::build(spec);
  const auto elements = all_elements(spec.n());
  for (auto _ : state) {
    int acc = 0;
    for (int k = 0; k < graph.size(); ++k)
      for (const WeylElement& w : elements) acc ^= demazure_on_orbit(graph, k, w);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_DemazureFoldAll)->Args({2, 1})->Args({2, 2});

static void BM_OraclePartition(benchmark::State& state) {
  const RealFormSpec spec{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(OraclePartition::build(spec, 3));
}
BENCHMARK(BM_OraclePartition)->Args({1, 1})->Args({2, 1})->Args({2, 2});

BENCHMARK_MAIN();
