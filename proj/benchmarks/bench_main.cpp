#include <benchmark/benchmark.h>

#include <random>

#include "chordcenter/characterize.hpp"
#include "chordcenter/chordality.hpp"
#include "chordcenter/metrics.hpp"
#include "chordcenter/separators.hpp"
#include "chordcenter/stretched.hpp"

using namespace chordcenter;

namespace {

// Each new vertex joins a random clique inside an earlier vertex's closed
// neighborhood, so it is simplicial when added and the result is chordal.
Graph random_chordal(int n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) {
    const Vertex u = static_cast<Vertex>(rng() % static_cast<std::uint32_t>(v));
    VertexSet clique = VertexSet::single(u);
    for (Vertex w : g.neighbors(u)) {
      if (rng() % 2 == 0 && (g.neighbors(w) & clique) == clique) clique.insert(w);
    }
    for (Vertex w : clique) g.add_edge(v, w);
  }
  return g;
}

void BM_MetricSummary(benchmark::State& state) {
  const Graph g = random_chordal(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(metric_summary(g));
}
BENCHMARK(BM_MetricSummary)->Arg(16)->Arg(32)->Arg(64);

void BM_IsChordal(benchmark::State& state) {
  const Graph g = random_chordal(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(is_chordal(g));
}
BENCHMARK(BM_IsChordal)->Arg(16)->Arg(32)->Arg(64);

void BM_ChordalityIndexCycle(benchmark::State& state) {
  const Graph g = named::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chordality_index(g));
}
BENCHMARK(BM_ChordalityIndexCycle)->Arg(8)->Arg(16)->Arg(32);

void BM_MinSeparator(benchmark::State& state) {
  const Graph g = named::path(static_cast<int>(state.range(0)));
  const DistanceMatrix dm(g);
  const Vertex last = g.order() - 1;
  for (auto _ : state) benchmark::DoNotOptimize(min_separator_within(g, dm, 0, VertexSet::single(last), 1));
}
BENCHMARK(BM_MinSeparator)->Arg(16)->Arg(64);

void BM_BuildStretched(benchmark::State& state) {
  const Graph g = random_chordal(static_cast<int>(state.range(0)), 3);
  const int t = (metric_summary(g).diameter + 1) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(build_t_stretched(g, t));
}
BENCHMARK(BM_BuildStretched)->Arg(16)->Arg(32)->Arg(64);

void BM_IsCenterOfChordal(benchmark::State& state) {
  const Graph g = named::figure1();
  for (auto _ : state) benchmark::DoNotOptimize(is_center_of_chordal(g));
}
BENCHMARK(BM_IsCenterOfChordal);

}  // namespace

BENCHMARK_MAIN();
