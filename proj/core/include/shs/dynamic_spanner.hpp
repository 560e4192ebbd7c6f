#pragma once

#include <cstdint>
#include <vector>

#include "shs/connectivity.hpp"
#include "shs/graph.hpp"
#include "shs/indexed_heap.hpp"
#include "shs/static_spanner.hpp"

namespace shs {

/// Single decremental update: delete edge (a,b). The edge must exist when
/// the event is applied.
struct UpdateEvent {
  NodeId a;
  NodeId b;
};

/// Nodes whose scores change under one edge deletion.
///
/// Non-bridge deletion: one set (the surviving component of the endpoints),
/// stored in side_a. Bridge deletion: the two post-split components, one per
/// side. Both sides are ascending.
struct AffectedSet {
  bool bridge = false;
  std::vector<NodeId> side_a;
  std::vector<NodeId> side_b;

  std::size_t total() const { return side_a.size() + side_b.size(); }
  bool contains(NodeId v) const;
};

/// Live tracking state for top-k spanner maintenance under edge deletions.
///
/// Between events the state is fully normalized: `scores` holds the exact
/// pairwise-connectivity score of every node in the current graph, the score
/// queue keys equal `scores`, and the spanner heap keys equal the current
/// scores of the members. Deletion events are strictly sequential; read-only
/// queries are safe between events.
class SpannerState {
 public:
  /// Seeds tracking with Algorithm 1's spanner set on g, then normalizes all
  /// bookkeeping to the full graph. 1 <= k <= node_count.
  SpannerState(const UndirectedGraph& g, std::size_t k);

  const UndirectedGraph& graph() const { return graph_; }
  const ScoreTable& scores() const { return scores_; }
  const ComponentIndex& comp() const { return comp_; }
  std::size_t k() const { return k_; }

  bool is_spanner(NodeId v) const { return topk_.contains(v); }

  /// Current spanner set, strongest first (score desc, id asc).
  SpannerSet spanners() const;

  /// Score-queue key of v (equals scores()[v] between events).
  Score queue_key(NodeId v) const { return queue_.key_of(v); }
  std::size_t queue_size() const { return queue_.size(); }

  /// Classifies the already-applied deletion (a,b) against the current graph:
  /// the reachable set of `a`, plus that of `b` when the edge was a bridge.
  AffectedSet find_affected(NodeId a, NodeId b) const;

  /// Deletes the event's edge, reclassifies components, rescores exactly the
  /// affected nodes, and refreshes queue and spanner keys.
  AffectedSet apply_deletion(const UpdateEvent& event);

  /// Greedy exchange between the tracked spanners and the strongest
  /// challengers in the queue; at most k iterations. See the implementation
  /// notes in dynamic_spanner.cpp.
  SpannerSet exchange_topk();

  /// apply_deletion followed by exchange_topk.
  SpannerSet handle_update(const UpdateEvent& event);

 private:
  UndirectedGraph graph_;
  ScoreTable scores_;
  ComponentIndex comp_;
  MaxScoreHeap queue_;  // every node, keyed by current score
  MinScoreHeap topk_;   // the k tracked spanners, weakest on top
  std::size_t k_ = 0;
};

}  // namespace shs
