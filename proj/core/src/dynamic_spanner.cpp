#include "shs/dynamic_spanner.hpp"

#include <algorithm>
#include <stdexcept>

namespace shs {

bool AffectedSet::contains(NodeId v) const {
  return std::binary_search(side_a.begin(), side_a.end(), v) ||
         std::binary_search(side_b.begin(), side_b.end(), v);
}

SpannerState::SpannerState(const UndirectedGraph& g, std::size_t k)
    : graph_(g), k_(k) {
  auto greedy = top_k_greedy(graph_, k);  // validates k, fixes the seed set
  scores_ = detail::all_component_scores(graph_);
  queue_ = MaxScoreHeap(scores_);
  topk_ = MinScoreHeap(graph_.node_count());
  for (const auto& entry : greedy.spanners) topk_.push(entry.node, scores_[entry.node]);
  comp_ = components(graph_);
}

SpannerSet SpannerState::spanners() const {
  SpannerSet out;
  out.reserve(topk_.size());
  for (NodeId v : topk_.nodes()) out.push_back({v, topk_.key_of(v)});
  std::sort(out.begin(), out.end(), [](const SpannerEntry& x, const SpannerEntry& y) {
    return stronger(x.score, x.node, y.score, y.node);
  });
  return out;
}

AffectedSet SpannerState::find_affected(NodeId a, NodeId b) const {
  AffectedSet aff;
  aff.side_a = reachable_from(graph_, a);
  aff.bridge = !std::binary_search(aff.side_a.begin(), aff.side_a.end(), b);
  if (aff.bridge) aff.side_b = reachable_from(graph_, b);
  return aff;
}

AffectedSet SpannerState::apply_deletion(const UpdateEvent& event) {
  const auto [a, b] = event;
  graph_.delete_edge(a, b);  // throws on absent edge / bad endpoints

  // One articulation pass from `a` collects the affected side and its new
  // scores; reaching `b` in that pass doubles as the bridge probe.
  AffectedSet aff;
  auto cs_a = detail::articulation_component_scores(graph_, a);
  aff.side_a = std::move(cs_a.members);
  aff.bridge = !std::binary_search(aff.side_a.begin(), aff.side_a.end(), b);

  auto install = [&](const std::vector<NodeId>& members, const std::vector<Score>& scores) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      const NodeId v = members[i];
      scores_[v] = scores[i];
      queue_.update(v, scores[i]);
      if (topk_.contains(v)) topk_.update(v, scores[i]);
    }
  };
  install(aff.side_a, cs_a.scores);

  if (aff.bridge) {
    auto cs_b = detail::articulation_component_scores(graph_, b);
    aff.side_b = std::move(cs_b.members);
    install(aff.side_b, cs_b.scores);

    // Case 2: the old component split in two; retire its label and hand each
    // side a fresh one.
    const auto old_label = comp_.label[a];
    comp_.sizes[old_label] = 0;
    const auto label_a = static_cast<std::uint32_t>(comp_.sizes.size());
    comp_.sizes.push_back(static_cast<Score>(aff.side_a.size()));
    const auto label_b = static_cast<std::uint32_t>(comp_.sizes.size());
    comp_.sizes.push_back(static_cast<Score>(aff.side_b.size()));
    for (NodeId v : aff.side_a) comp_.label[v] = label_a;
    for (NodeId v : aff.side_b) comp_.label[v] = label_b;
    ++comp_.component_count;
  }
  // Case 1 (non-bridge): components unchanged.
  return aff;
}

// Exchange procedure, at most k placements per pass.
//
// Each step takes the strongest queue entry under the shared (score, id)
// order and compares it with the weakest tracked member; the pass terminates
// as soon as the top entry cannot beat that member. A member surfacing at the
// top is confirmed: its key is re-anchored and it is parked out of the queue,
// but its removal from the scratch overlay is deferred. Only when an outside
// challenger actually beats the weakest member are the deferred removals
// materialized, and the challenger alone is rescored against the overlay
// (one component-scoped traversal); the comparison then reruns with that
// residual score. Redundant neighbors of the existing members collapse at
// that point and stay out of the set, while the typical nothing-changes pass
// costs only heap peeks. A winning challenger replaces the weakest member,
// leaves the overlay, and frees the evicted node to compete again.
//
// Afterwards every queue key and member key is restored to the full-graph
// score table, so the state is normalized for the next event.
SpannerSet SpannerState::exchange_topk() {
  WorkingGraph working(graph_);
  std::vector<NodeId> touched;  // queue keys to restore afterwards
  std::vector<NodeId> pending;  // confirmed members awaiting overlay removal

  // Challenger keys must reflect the overlay they are compared under; the
  // epoch advances whenever the overlay changes.
  std::vector<std::uint32_t> eval_epoch(graph_.node_count(), 0);
  std::uint32_t overlay_epoch = 0;

  std::size_t placements = 0;
  while (placements < k_ && !queue_.empty()) {
    const NodeId top = queue_.top();
    const Score top_key = queue_.top_key();
    if (!stronger(top_key, top, topk_.top_key(), topk_.top())) break;

    if (topk_.contains(top)) {
      topk_.update(top, top_key);
      queue_.erase(top);
      touched.push_back(top);
      pending.push_back(top);
      ++placements;
      continue;
    }

    if (!pending.empty()) {
      for (NodeId w : pending) working.remove_node(w);
      pending.clear();
      ++overlay_epoch;
    }
    if (overlay_epoch != 0 && eval_epoch[top] != overlay_epoch) {
      eval_epoch[top] = overlay_epoch;
      const Score residual = detail::single_component_score(working, top);
      if (residual != top_key) {
        queue_.update(top, residual);
        touched.push_back(top);
        continue;  // redo the comparison with the honest score
      }
    }

    const NodeId evicted = topk_.pop_top();
    topk_.push(top, top_key);
    queue_.erase(top);
    // The evicted node competes again at its current working score. If it had
    // been confirmed earlier in this pass, undo that: re-enter the queue and
    // the overlay, keep the maintained key.
    if (!queue_.contains(evicted)) queue_.push(evicted, queue_.key_of(evicted));
    if (auto it = std::find(pending.begin(), pending.end(), evicted); it != pending.end())
      pending.erase(it);
    if (!working.active(evicted)) {
      working.restore_node(evicted);
      ++overlay_epoch;
    }
    touched.push_back(top);
    touched.push_back(evicted);
    ++placements;
    if (placements < k_) {
      working.remove_node(top);  // later comparisons see the insertion
      ++overlay_epoch;
    }
  }

  // Normalize: queue keys back to full-graph scores, members reinstated into
  // the queue, member keys refreshed to their current scores.
  for (NodeId v : touched)
    if (queue_.contains(v)) queue_.update(v, scores_[v]);
  const std::vector<NodeId> members(topk_.nodes().begin(), topk_.nodes().end());
  for (NodeId member : members) {
    if (!queue_.contains(member)) queue_.push(member, scores_[member]);
    topk_.update(member, scores_[member]);
  }
  return spanners();
}

SpannerSet SpannerState::handle_update(const UpdateEvent& event) {
  apply_deletion(event);
  return exchange_topk();
}

}  // namespace shs
