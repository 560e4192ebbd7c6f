#include <benchmark/benchmark.h>

#include <random>

#include "shs/dynamic_spanner.hpp"
#include "shs/static_spanner.hpp"
#include "shs/synthetic.hpp"

namespace {

const shs::UndirectedGraph& large_graph() {
  static const shs::UndirectedGraph g = shs::community_graph(4039, 14342, 48, 6, 454545);
  return g;
}

void BM_StaticRecompute(benchmark::State& state) {
  const auto& g = large_graph();
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto result = shs::top_k_greedy(g, k);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_StaticRecompute)->Arg(1)->Arg(5);

// One tracked deletion, amortised over a pre-built state. Clone cost is
// excluded via manual timing.
void BM_HandleUpdate(benchmark::State& state) {
  const auto& g = large_graph();
  const auto k = static_cast<std::size_t>(state.range(0));
  const shs::SpannerState base(g, k);
  std::mt19937_64 rng(7);
  const auto edges = g.edges();
  for (auto _ : state) {
    state.PauseTiming();
    shs::SpannerState clone = base;
    const auto e = edges[shs::bounded_draw(rng, edges.size())];
    state.ResumeTiming();
    clone.handle_update({e.first, e.second});
    benchmark::DoNotOptimize(clone);
  }
}
BENCHMARK(BM_HandleUpdate)->Arg(1)->Arg(5);

void BM_IndexedHeapUpdate(benchmark::State& state) {
  const std::size_t n = 4096;
  std::vector<shs::Score> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = static_cast<shs::Score>(i * 37 % 1009);
  shs::MaxScoreHeap heap(keys);
  std::mt19937_64 rng(3);
  for (auto _ : state) {
    const auto v = static_cast<shs::NodeId>(shs::bounded_draw(rng, n));
    heap.update(v, static_cast<shs::Score>(shs::bounded_draw(rng, 1 << 20)));
    benchmark::DoNotOptimize(heap.top());
  }
}
BENCHMARK(BM_IndexedHeapUpdate);

}  // namespace

BENCHMARK_MAIN();
