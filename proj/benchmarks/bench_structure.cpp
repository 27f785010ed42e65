#include <benchmark/benchmark.h>

#include <random>

#include "rvclab/catalog.hpp"
#include "rvclab/colorers.hpp"
#include "rvclab/generators.hpp"
#include "rvclab/structure.hpp"

namespace {

using namespace rvclab;

std::vector<Graph> samples(const std::vector<Graph>& forbidden, int count) {
  std::mt19937_64 rng(11);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(sample_free_graph(rng, forbidden));
  return out;
}

void BM_ColorS122NFree(benchmark::State& state) {
  const auto graphs = samples(
      {generate(FamilySpec::spider(1, 2, 2)), generate(FamilySpec::net(1, 1, 1))}, 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(color_s122_n_free(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_ColorS122NFree)->Unit(benchmark::kMicrosecond);

void BM_ColorP5KthFree(benchmark::State& state) {
  const auto graphs =
      samples({generate(FamilySpec::path(5)), generate(FamilySpec::g2(4))}, 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(color_p5_kth_free(graphs[i++ % graphs.size()], 4));
}
BENCHMARK(BM_ColorP5KthFree)->Unit(benchmark::kMicrosecond);

void BM_PartitionAndCheck(benchmark::State& state) {
  const Graph g = generate(FamilySpec::path(static_cast<int>(state.range(0))));
  std::vector<Vertex> path(g.order());
  for (Vertex v = 0; v < g.order(); ++v) path[v] = v;
  for (auto _ : state) {
    const auto part = classify_against_path(g, path);
    benchmark::DoNotOptimize(check_partition_lemma(g, part));
  }
}
BENCHMARK(BM_PartitionAndCheck)->Arg(8)->Arg(32)->Arg(62);

void BM_DominatingStructure(benchmark::State& state) {
  const Graph g = generate(FamilySpec::g2(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(find_dominating_clique_or_p3(g));
}
BENCHMARK(BM_DominatingStructure)->Arg(6)->Arg(12)->Arg(20);

}  // namespace
