#include <benchmark/benchmark.h>

#include <random>

#include "rvclab/generators.hpp"
#include "rvclab/rvc.hpp"

namespace {

using namespace rvclab;

void BM_VerifyUniformNet(benchmark::State& state) {
  const Graph g = generate(FamilySpec::g3(static_cast<int>(state.range(0))));
  std::mt19937_64 rng(1);
  std::vector<int> colors(g.order());
  for (int& c : colors) c = static_cast<int>(rng() % 16);
  const VertexColoring c{colors, 16};
  for (auto _ : state) benchmark::DoNotOptimize(is_rainbow_vertex_connected(g, c));
  state.SetLabel("n=" + std::to_string(g.order()));
}
BENCHMARK(BM_VerifyUniformNet)->Arg(3)->Arg(5)->Arg(8)->Arg(12);

// Halved colorings of long cycles pass, so every source runs to completion.
void BM_VerifyHalvedCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = generate(FamilySpec::cycle(n));
  const VertexColoring c = halved_cycle_coloring(n);
  for (auto _ : state) benchmark::DoNotOptimize(is_rainbow_vertex_connected(g, c));
}
BENCHMARK(BM_VerifyHalvedCycle)->Arg(16)->Arg(32)->Arg(48);

void BM_RvcExactCycle(benchmark::State& state) {
  const Graph g = generate(FamilySpec::cycle(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(rvc_exact(g, {.deep = true}));
}
BENCHMARK(BM_RvcExactCycle)->DenseRange(9, 16, 1)->Unit(benchmark::kMillisecond);

void BM_RvcExactPendantComplete(benchmark::State& state) {
  const Graph g = generate(FamilySpec::g2(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(rvc_exact(g, {.deep = true}));
}
BENCHMARK(BM_RvcExactPendantComplete)->DenseRange(4, 7, 1)->Unit(benchmark::kMillisecond);

void BM_SpanningTreeColoring(benchmark::State& state) {
  const Graph g = generate(FamilySpec::g4(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(spanning_tree_coloring(g));
}
BENCHMARK(BM_SpanningTreeColoring)->Arg(8)->Arg(16)->Arg(31);

}  // namespace
