#include <benchmark/benchmark.h>

#include "shs/connectivity.hpp"
#include "shs/oracle.hpp"
#include "shs/synthetic.hpp"

namespace {

const shs::UndirectedGraph& test_graph(int nodes) {
  static std::map<int, shs::UndirectedGraph> cache;
  auto it = cache.find(nodes);
  if (it == cache.end())
    it = cache.emplace(nodes, shs::gnm_graph(nodes, nodes * 7 / 2, 88)).first;
  return it->second;
}

void BM_BatchComponentScores(benchmark::State& state) {
  const auto& g = test_graph(static_cast<int>(state.range(0)));
  shs::WorkingGraph view(g);
  for (auto _ : state) {
    auto scores = shs::detail::all_component_scores(view);
    benchmark::DoNotOptimize(scores);
  }
}
BENCHMARK(BM_BatchComponentScores)->Arg(256)->Arg(1024)->Arg(4096);

void BM_PerNodeScoreOracle(benchmark::State& state) {
  const auto& g = test_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto scores = shs::oracle::score_oracle(g);
    benchmark::DoNotOptimize(scores);
  }
}
BENCHMARK(BM_PerNodeScoreOracle)->Arg(256)->Arg(1024);

void BM_TotalPairwiseConnectivity(benchmark::State& state) {
  const auto& g = test_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shs::total_pairwise_connectivity(g));
}
BENCHMARK(BM_TotalPairwiseConnectivity)->Arg(1024)->Arg(4096);

}  // namespace
