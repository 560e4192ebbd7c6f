#include "shs/static_spanner.hpp"

#include <stdexcept>
#include <string>

#include "shs/indexed_heap.hpp"

namespace shs {

GreedyResult top_k_greedy(const UndirectedGraph& g, std::size_t k) {
  const std::size_t n = g.node_count();
  if (k < 1 || k > n)
    throw std::invalid_argument("top_k_greedy: k=" + std::to_string(k) +
                                " outside [1," + std::to_string(n) + "]");

  WorkingGraph working(g);
  ScoreTable scores = detail::all_component_scores(working);
  MaxScoreHeap queue(scores);
  GreedyResult result;
  result.spanners.reserve(k);

  for (std::size_t round = 0; round < k; ++round) {
    const NodeId pick = queue.top();
    const Score pick_score = queue.top_key();
    queue.erase(pick);
    result.spanners.push_back({pick, pick_score});

    // Only the component that lost the pick changes.
    auto former = reachable_from(working, pick);
    working.remove_node(pick);
    detail::rescore_after_removal(working, former, pick, [&](NodeId v, Score s) {
      scores[v] = s;
      queue.update(v, s);
    });
  }

  result.residual_scores = std::move(scores);
  return result;
}

}  // namespace shs
