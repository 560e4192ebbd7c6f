#pragma once

#include <span>
#include <vector>

#include "shs/graph.hpp"

namespace shs {

/// Per-node pairwise-connectivity scores, indexed by NodeId.
using ScoreTable = std::vector<Score>;

/// Total pairwise connectivity P(G): the number of unordered connected node
/// pairs, summed per component as |C|(|C|-1)/2.
///
/// Convention note: summing over ordered pairs instead would double this
/// value; every argmax/argmin decision in the library is invariant to that
/// factor, and the unordered count is what all Score values use.
template <GraphView G>
Score total_pairwise_connectivity(const G& g) {
  Score total = 0;
  for (Score s : components(g).sizes) total += pair_count(s);
  return total;
}

namespace detail {

/// P of the view with one extra node masked out; the second labeling a
/// node score needs.
template <GraphView G>
Score pairwise_connectivity_excluding(const G& g, NodeId skip) {
  Score total = 0;
  std::vector<char> seen(g.node_count(), 0);
  seen[skip] = 1;
  std::vector<NodeId> queue;
  for (NodeId root = 0; root < g.node_count(); ++root) {
    if (seen[root] || !g.active(root)) continue;
    queue.assign(1, root);
    seen[root] = 1;
    Score size = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ++size;
      for (NodeId w : g.neighbors(queue[head]))
        if (!seen[w] && g.active(w)) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    total += pair_count(size);
  }
  return total;
}

/// Members of root's component together with the pairwise-connectivity score
/// of every member, computed in one articulation-point DFS.
///
/// For a node v in a component of size s whose removal splits the component
/// into fragments of sizes s_1..s_t, the score is
///     s(s-1)/2 - sum_j s_j(s_j-1)/2.
/// The DFS accumulates, per node, the pair counts of the child subtrees that
/// get cut off (low >= disc) plus the remainder fragment that stays attached
/// to the rest of the component.
struct ComponentScores {
  std::vector<NodeId> members;  // ascending
  std::vector<Score> scores;    // aligned with members
};

template <GraphView G>
ComponentScores articulation_component_scores(const G& g, NodeId root) {
  const std::size_t n = g.node_count();
  // Sparse per-node state, touched only for this component.
  thread_local std::vector<std::uint32_t> disc, low;
  thread_local std::vector<Score> subtree, cut_pairs, cut_sizes;
  if (disc.size() < n) {
    disc.assign(n, 0);
    low.assign(n, 0);
    subtree.assign(n, 0);
    cut_pairs.assign(n, 0);
    cut_sizes.assign(n, 0);
  }

  struct Frame {
    NodeId node;
    NodeId parent;
    std::size_t next;  // index into neighbors(node)
  };

  ComponentScores out;
  std::vector<Frame> stack;
  std::uint32_t timer = 1;

  disc[root] = low[root] = timer++;
  subtree[root] = 1;
  cut_pairs[root] = cut_sizes[root] = 0;
  stack.push_back({root, root, 0});
  out.members.push_back(root);

  while (!stack.empty()) {
    Frame& fr = stack.back();
    const auto nbrs = g.neighbors(fr.node);
    if (fr.next < nbrs.size()) {
      const NodeId w = nbrs[fr.next++];
      if (!g.active(w)) continue;
      if (disc[w] == 0) {
        disc[w] = low[w] = timer++;
        subtree[w] = 1;
        cut_pairs[w] = cut_sizes[w] = 0;
        stack.push_back({w, fr.node, 0});
        out.members.push_back(w);
      } else if (w != fr.parent && disc[w] < low[fr.node]) {
        low[fr.node] = disc[w];
      }
      continue;
    }
    // Post-order: fold this node into its parent.
    stack.pop_back();
    if (stack.empty()) break;
    Frame& par = stack.back();
    low[par.node] = std::min(low[par.node], low[fr.node]);
    subtree[par.node] += subtree[fr.node];
    if (low[fr.node] >= disc[par.node]) {
      // Removing the parent cuts this child subtree off.
      cut_pairs[par.node] += pair_count(subtree[fr.node]);
      cut_sizes[par.node] += subtree[fr.node];
    }
  }

  std::sort(out.members.begin(), out.members.end());
  const Score comp_size = static_cast<Score>(out.members.size());
  const Score comp_pairs = pair_count(comp_size);
  out.scores.resize(out.members.size());
  for (std::size_t i = 0; i < out.members.size(); ++i) {
    const NodeId v = out.members[i];
    // For the DFS root every child subtree is cut, so the remainder is 0.
    const Score rest = comp_size - 1 - cut_sizes[v];
    out.scores[i] = comp_pairs - cut_pairs[v] - pair_count(rest);
  }

  // Reset the touched entries so the scratch arrays stay all-zero.
  for (NodeId v : out.members) disc[v] = low[v] = 0;
  return out;
}

/// Score of one node, confined to its component: fragment BFS from its
/// neighbors with the node itself masked. The cheap form of component-scoped
/// scoring when only a single value is needed.
template <GraphView G>
Score single_component_score(const G& g, NodeId i) {
  std::vector<char> seen(g.node_count(), 0);
  seen[i] = 1;
  Score comp_size = 1;  // i itself
  Score fragment_pairs = 0;
  std::vector<NodeId> queue;
  for (NodeId seed : g.neighbors(i)) {
    if (seen[seed] || !g.active(seed)) continue;
    queue.assign(1, seed);
    seen[seed] = 1;
    Score size = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ++size;
      for (NodeId w : g.neighbors(queue[head]))
        if (!seen[w] && g.active(w)) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    comp_size += size;
    fragment_pairs += pair_count(size);
  }
  return pair_count(comp_size) - fragment_pairs;
}

/// Scores for every active node, one articulation DFS per component.
template <GraphView G>
std::vector<Score> all_component_scores(const G& g) {
  std::vector<Score> scores(g.node_count(), 0);
  std::vector<char> done(g.node_count(), 0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (done[v] || !g.active(v)) continue;
    auto cs = articulation_component_scores(g, v);
    for (std::size_t i = 0; i < cs.members.size(); ++i) {
      scores[cs.members[i]] = cs.scores[i];
      done[cs.members[i]] = 1;
    }
  }
  return scores;
}

/// After `removed` is masked out of g, rescores what is left of its former
/// component (`former`, ascending, including `removed`). The removal may have
/// split it into several fragments; emit(node, score) fires once per
/// surviving member.
template <GraphView G, typename Emit>
void rescore_after_removal(const G& g, std::span<const NodeId> former, NodeId removed,
                           Emit&& emit) {
  std::vector<char> done(former.size(), 0);
  for (std::size_t i = 0; i < former.size(); ++i) {
    if (former[i] == removed || done[i]) continue;
    auto cs = articulation_component_scores(g, former[i]);
    for (std::size_t j = 0; j < cs.members.size(); ++j) {
      emit(cs.members[j], cs.scores[j]);
      auto it = std::lower_bound(former.begin(), former.end(), cs.members[j]);
      if (it != former.end() && *it == cs.members[j])
        done[static_cast<std::size_t>(it - former.begin())] = 1;
    }
  }
}

}  // namespace detail

/// Pairwise connectivity score c(i) = P(G) - P(G \ {i}), computed from two
/// whole-graph labelings without mutating g.
template <GraphView G>
Score node_score(const G& g, NodeId i) {
  if (i >= g.node_count() || !g.active(i))
    throw std::out_of_range("node_score: invalid node");
  return total_pairwise_connectivity(g) - detail::pairwise_connectivity_excluding(g, i);
}

/// Component-scoped score: P(C(i)) - P(C(i) \ {i}). Only i's component is
/// traversed; `comp` must be consistent with g (a label mismatch or size
/// mismatch raises a consistency error).
template <GraphView G>
Score node_score_component(const G& g, const ComponentIndex& comp, NodeId i) {
  if (i >= g.node_count() || !g.active(i))
    throw std::out_of_range("node_score_component: invalid node");
  const auto lbl = comp.label[i];
  if (lbl == ComponentIndex::kNoComponent)
    throw std::invalid_argument("node_score_component: stale component index (unlabeled node)");

  // Traverse i's component while skipping i; fragment sizes fall out of the
  // BFS restarts. Every fragment of C(i)\{i} contains a neighbor of i.
  std::vector<char> seen(g.node_count(), 0);
  seen[i] = 1;
  Score comp_size = 1;  // i itself
  Score fragment_pairs = 0;
  std::vector<NodeId> queue;
  for (NodeId seed : g.neighbors(i)) {
    if (seen[seed] || !g.active(seed)) continue;
    if (comp.label[seed] != lbl)
      throw std::invalid_argument("node_score_component: stale component index (label mismatch)");
    queue.assign(1, seed);
    seen[seed] = 1;
    Score size = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ++size;
      for (NodeId w : g.neighbors(queue[head])) {
        if (seen[w] || !g.active(w)) continue;
        if (comp.label[w] != lbl)
          throw std::invalid_argument(
              "node_score_component: stale component index (label mismatch)");
        seen[w] = 1;
        queue.push_back(w);
      }
    }
    comp_size += size;
    fragment_pairs += pair_count(size);
  }
  if (comp_size != comp.sizes[lbl])
    throw std::invalid_argument("node_score_component: stale component index (size mismatch)");
  return pair_count(comp_size) - fragment_pairs;
}

/// Scores for `members`, which must all lie in one component of g. One
/// articulation-point DFS covers the whole component; results match
/// node_score_component per member.
template <GraphView G>
std::vector<Score> batch_component_scores(const G& g, const ComponentIndex& comp,
                                          std::span<const NodeId> members) {
  if (members.empty()) return {};
  const auto lbl = comp.label[members.front()];
  for (NodeId v : members)
    if (v >= g.node_count() || comp.label[v] != lbl)
      throw std::invalid_argument("batch_component_scores: members span components");

  auto cs = detail::articulation_component_scores(g, members.front());
  if (static_cast<Score>(cs.members.size()) != comp.sizes[lbl])
    throw std::invalid_argument("batch_component_scores: stale component index");
  std::vector<Score> out;
  out.reserve(members.size());
  for (NodeId v : members) {
    auto it = std::lower_bound(cs.members.begin(), cs.members.end(), v);
    if (it == cs.members.end() || *it != v)
      throw std::invalid_argument("batch_component_scores: member not in component");
    out.push_back(cs.scores[static_cast<std::size_t>(it - cs.members.begin())]);
  }
  return out;
}

}  // namespace shs
