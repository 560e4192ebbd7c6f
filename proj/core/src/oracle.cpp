#include "shs/oracle.hpp"

#include <stdexcept>
#include <string>

namespace shs::oracle {

ScoreTable score_oracle(const UndirectedGraph& g) {
  ScoreTable scores(g.node_count(), 0);
  const Score total = total_pairwise_connectivity(g);
  for (NodeId v = 0; v < g.node_count(); ++v)
    scores[v] = total - detail::pairwise_connectivity_excluding(g, v);
  return scores;
}

SpannerSet static_recompute(const UndirectedGraph& g, std::size_t k) {
  return top_k_greedy(g, k).spanners;
}

Score residual_connectivity(const UndirectedGraph& g, std::span<const NodeId> removed) {
  WorkingGraph working(g);
  for (NodeId v : removed) working.remove_node(v);
  return total_pairwise_connectivity(working);
}

BruteForceResult brute_force_topk(const UndirectedGraph& g, std::size_t k) {
  const std::size_t n = g.node_count();
  if (n > 16 || k > 3)
    throw std::invalid_argument("brute_force_topk: guarded to n <= 16 and k <= 3, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
  if (k < 1 || k > n) throw std::invalid_argument("brute_force_topk: k out of range");

  BruteForceResult best;
  best.residual_connectivity = -1;

  std::vector<NodeId> subset(k);
  // Lexicographic subset enumeration; keeping only strict improvements makes
  // the first (smallest) optimum win ties.
  auto recurse = [&](auto&& self, std::size_t depth, NodeId first) -> void {
    if (depth == k) {
      const Score residual = residual_connectivity(g, subset);
      if (best.residual_connectivity < 0 || residual < best.residual_connectivity) {
        best.residual_connectivity = residual;
        best.nodes = subset;
      }
      return;
    }
    for (NodeId v = first; v < n; ++v) {
      subset[depth] = v;
      self(self, depth + 1, v + 1);
    }
  };
  recurse(recurse, 0, 0);
  return best;
}

}  // namespace shs::oracle
