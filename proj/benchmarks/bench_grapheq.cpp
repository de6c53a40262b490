#include <benchmark/benchmark.h>

#include "grapheq/canonical.hpp"
#include "grapheq/class_search.hpp"
#include "grapheq/graph_spec.hpp"
#include "grapheq/indpoly.hpp"
#include "grapheq/spectral.hpp"

using namespace grapheq;

static void BM_IndPolyCycleCold(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    PolyCache cache;
    benchmark::DoNotOptimize(indpoly(g, cache));
  }
}
BENCHMARK(BM_IndPolyCycleCold)->Arg(15)->Arg(30)->Arg(60);

static void BM_IndPolyBruteForce(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(indpoly_bruteforce(g));
}
BENCHMARK(BM_IndPolyBruteForce)->Arg(15)->Arg(20);

static void BM_CanonicalKey(benchmark::State& state) {
  const Graph g = build_graph(parse_graph_spec("C3 + C5 + B(2,3,4)"));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_CanonicalKey);

static void BM_CanonicalKeyCycle(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_CanonicalKeyCycle)->Arg(16)->Arg(64);

static void BM_FactorRoute(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  const auto route = state.range(1) == 0 ? FactorRoute::Division : FactorRoute::Transform;
  for (auto _ : state) benchmark::DoNotOptimize(factorize_cycle_poly(n, route));
}
BENCHMARK(BM_FactorRoute)->Args({45, 0})->Args({45, 1})->Args({99, 0})->Args({99, 1});

static void BM_StructuredSearch(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(structured_class_search(n));
}
BENCHMARK(BM_StructuredSearch)->Arg(9)->Arg(15)->Arg(45)->Unit(benchmark::kMillisecond);

static void BM_UnicyclicSearch(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_class_search(n, SearchMode::Unicyclic));
}
BENCHMARK(BM_UnicyclicSearch)->Arg(15)->Arg(21)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
