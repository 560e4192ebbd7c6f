#pragma once

#include <cstdint>
#include <vector>

#include "shs/connectivity.hpp"
#include "shs/graph.hpp"

namespace shs {

/// One tracked spanner: the node plus the score it carried when selected
/// (static path) or its current score (dynamic path).
struct SpannerEntry {
  NodeId node;
  Score score;
  bool operator==(const SpannerEntry&) const = default;
};

/// Selected spanners in selection order, capacity k.
using SpannerSet = std::vector<SpannerEntry>;

struct GreedyResult {
  SpannerSet spanners;
  /// Scores of the residual graph after all k removals; removed nodes keep
  /// the score they had at selection time.
  ScoreTable residual_scores;
};

/// Greedy top-k identification: repeatedly remove the node with the maximum
/// pairwise-connectivity score from a working copy of g. Ties break to the
/// lowest node id. The input graph is not mutated.
///
/// Per round only the component that lost a node is rescored; scores come
/// from the articulation-point batch scorer.
GreedyResult top_k_greedy(const UndirectedGraph& g, std::size_t k);

}  // namespace shs
