#pragma once

#include <vector>

#include "shs/connectivity.hpp"
#include "shs/graph.hpp"
#include "shs/static_spanner.hpp"

namespace shs::oracle {

/// Literal whole-graph recomputation of c(i) = P(G) - P(G \ {i}) for every
/// node. Quadratic-ish; test and verification use only.
ScoreTable score_oracle(const UndirectedGraph& g);

/// The static baseline: rerun the greedy identification on the current graph.
SpannerSet static_recompute(const UndirectedGraph& g, std::size_t k);

struct BruteForceResult {
  std::vector<NodeId> nodes;  // ascending
  Score residual_connectivity;
};

/// Exhaustive minimum of P(G \ S) over all C(n,k) subsets. Ties break to the
/// lexicographically smallest id set. Guarded to n <= 16, k <= 3 so CI can
/// never run exponential work by accident.
BruteForceResult brute_force_topk(const UndirectedGraph& g, std::size_t k);

/// P(G \ S) for an explicit removal set; shared by tests and the bench
/// quality ledger.
Score residual_connectivity(const UndirectedGraph& g, std::span<const NodeId> removed);

}  // namespace shs::oracle
