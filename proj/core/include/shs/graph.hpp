#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shs {

/// Dense node index in [0, n). The node set is fixed for the lifetime of a
/// graph instance; only edges change.
using NodeId = std::uint32_t;

/// Exact count of unordered connected node pairs (or a per-node contribution
/// to it). Always integral, never approximated.
using Score = std::int64_t;

using Edge = std::pair<NodeId, NodeId>;

/// Unordered pairs among `s` mutually connected nodes.
inline constexpr Score pair_count(Score s) { return s * (s - 1) / 2; }

/// Mutable undirected simple graph over dense node ids.
///
/// Adjacency lists are kept sorted so edge deletion is a binary search and
/// iteration order is deterministic. No self-loops, no parallel edges.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;

  /// Builds a graph with `node_count` nodes and the de-duplicated undirected
  /// edges of `edges`. Rejects out-of-range endpoints and self-loops.
  UndirectedGraph(std::size_t node_count, std::span<const Edge> edges)
      : adj_(node_count) {
    for (const auto& [a, b] : edges) check_edge_endpoints(a, b);
    for (const auto& [a, b] : edges) {
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
    for (auto& nbrs : adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      edge_count_ += nbrs.size();
    }
    edge_count_ /= 2;
  }

  UndirectedGraph(std::size_t node_count, std::initializer_list<Edge> edges)
      : UndirectedGraph(node_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    check_node(v);
    return adj_[v];
  }

  /// Every node of a plain graph is active; see WorkingGraph for the masked
  /// overlay used by the exchange procedure.
  bool active(NodeId) const { return true; }

  bool has_edge(NodeId a, NodeId b) const {
    check_node(a);
    check_node(b);
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  /// Removes edge (a,b). A missing edge signals a malformed update stream
  /// and throws.
  void delete_edge(NodeId a, NodeId b) {
    check_edge_endpoints(a, b);
    if (!erase_neighbor(a, b) || !erase_neighbor(b, a))
      throw std::invalid_argument("delete_edge: edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") not present");
    --edge_count_;
  }

  /// Inserts edge (a,b); rejects self-loops and duplicates. Used by loaders
  /// and by tests that undo deletions.
  void add_edge(NodeId a, NodeId b) {
    check_edge_endpoints(a, b);
    auto pos = std::lower_bound(adj_[a].begin(), adj_[a].end(), b);
    if (pos != adj_[a].end() && *pos == b)
      throw std::invalid_argument("add_edge: edge already present");
    adj_[a].insert(pos, b);
    adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
    ++edge_count_;
  }

  /// All edges as (u,v) with u < v, in ascending order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < adj_.size(); ++u)
      for (NodeId v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  bool erase_neighbor(NodeId from, NodeId nbr) {
    auto& nbrs = adj_[from];
    auto pos = std::lower_bound(nbrs.begin(), nbrs.end(), nbr);
    if (pos == nbrs.end() || *pos != nbr) return false;
    nbrs.erase(pos);
    return true;
  }

  void check_node(NodeId v) const {
    if (v >= adj_.size())
      throw std::out_of_range("node id " + std::to_string(v) + " out of range [0," +
                              std::to_string(adj_.size()) + ")");
  }

  void check_edge_endpoints(NodeId a, NodeId b) const {
    check_node(a);
    check_node(b);
    if (a == b)
      throw std::invalid_argument("self-loop (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") not allowed");
  }

  std::vector<std::vector<NodeId>> adj_;
  std::size_t edge_count_ = 0;
};

/// Copy-on-write overlay over a graph: a removed-node mask. Traversals see
/// the base graph minus the removed nodes. The base must outlive the overlay
/// and must not be mutated while the overlay is in use.
class WorkingGraph {
 public:
  explicit WorkingGraph(const UndirectedGraph& base)
      : base_(&base), removed_(base.node_count(), 0) {}

  std::size_t node_count() const { return base_->node_count(); }
  std::span<const NodeId> neighbors(NodeId v) const { return base_->neighbors(v); }
  bool active(NodeId v) const { return !removed_[v]; }

  void remove_node(NodeId v) {
    if (v >= removed_.size()) throw std::out_of_range("remove_node: bad id");
    removed_[v] = 1;
  }

  void restore_node(NodeId v) { removed_.at(v) = 0; }

 private:
  const UndirectedGraph* base_;
  std::vector<char> removed_;
};

template <typename G>
concept GraphView = requires(const G& g, NodeId v) {
  { g.node_count() } -> std::convertible_to<std::size_t>;
  { g.neighbors(v) } -> std::convertible_to<std::span<const NodeId>>;
  { g.active(v) } -> std::convertible_to<bool>;
};

/// Node -> component labeling with per-component sizes. Labels of masked-out
/// nodes are kNoComponent and do not count toward any size.
struct ComponentIndex {
  static constexpr std::uint32_t kNoComponent = 0xffffffff;

  std::vector<std::uint32_t> label;
  std::vector<Score> sizes;  // indexed by label; retired labels keep size 0
  std::size_t component_count = 0;

  Score size_of(NodeId v) const { return sizes[label[v]]; }
};

/// Nodes connected to `s`, including `s` itself, in ascending id order.
template <GraphView G>
std::vector<NodeId> reachable_from(const G& g, NodeId s) {
  if (s >= g.node_count() || !g.active(s))
    throw std::out_of_range("reachable_from: invalid source node");
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> queue{s};
  seen[s] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (NodeId w : g.neighbors(queue[head])) {
      if (!seen[w] && g.active(w)) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

/// Labels every active node with its connected component.
template <GraphView G>
ComponentIndex components(const G& g) {
  ComponentIndex idx;
  idx.label.assign(g.node_count(), ComponentIndex::kNoComponent);
  std::vector<NodeId> queue;
  for (NodeId root = 0; root < g.node_count(); ++root) {
    if (!g.active(root) || idx.label[root] != ComponentIndex::kNoComponent) continue;
    const auto comp = static_cast<std::uint32_t>(idx.sizes.size());
    idx.label[root] = comp;
    queue.assign(1, root);
    Score size = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ++size;
      for (NodeId w : g.neighbors(queue[head])) {
        if (g.active(w) && idx.label[w] == ComponentIndex::kNoComponent) {
          idx.label[w] = comp;
          queue.push_back(w);
        }
      }
    }
    idx.sizes.push_back(size);
    ++idx.component_count;
  }
  return idx;
}

/// True iff the just-deleted edge (a,b) was a bridge: b is no longer
/// reachable from a. Call immediately after delete_edge(a,b).
inline bool is_bridge_after_delete(const UndirectedGraph& g, NodeId a, NodeId b) {
  auto reach = reachable_from(g, a);
  return !std::binary_search(reach.begin(), reach.end(), b);
}

}  // namespace shs
