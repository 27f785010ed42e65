#include <benchmark/benchmark.h>

#include <random>

#include "rvclab/catalog.hpp"
#include "rvclab/detect.hpp"
#include "rvclab/generators.hpp"

namespace {

using namespace rvclab;

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

void BM_FindInducedSpider(benchmark::State& state) {
  const Graph pattern = generate(FamilySpec::spider(1, 2, 2));
  const Graph host = random_graph(static_cast<int>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(find_induced(pattern, host));
}
BENCHMARK(BM_FindInducedSpider)->Arg(16)->Arg(32)->Arg(62);

// Worst case: the pattern is absent, so the whole search space is explored.
void BM_FindInducedAbsentNet(benchmark::State& state) {
  const Graph pattern = generate(FamilySpec::net(1, 1, 1));
  const Graph host = generate(FamilySpec::g4(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(find_induced(pattern, host));
}
BENCHMARK(BM_FindInducedAbsentNet)->Arg(8)->Arg(16)->Arg(31);

void BM_ConnectedCatalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(connected_catalog(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ConnectedCatalog)->DenseRange(5, 8, 1)->Unit(benchmark::kMillisecond);

void BM_SampleFreeGraph(benchmark::State& state) {
  const std::vector<Graph> forbidden = {generate(FamilySpec::spider(1, 2, 2)),
                                        generate(FamilySpec::net(1, 1, 1))};
  std::mt19937_64 rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(sample_free_graph(rng, forbidden));
}
BENCHMARK(BM_SampleFreeGraph)->Unit(benchmark::kMillisecond);

}  // namespace
