#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "shs/graph.hpp"

namespace shs {

/// Total order on (score, id) pairs used everywhere a winner must be picked:
/// higher score wins, ties go to the lower node id. This is the tie rule the
/// greedy selection, the exchange loop, and all oracle comparisons share.
inline bool stronger(Score sa, NodeId a, Score sb, NodeId b) {
  return sa > sb || (sa == sb && a < b);
}

/// Index-tracked binary heap over node ids with O(log n) key update.
///
/// Capacity is fixed at construction; every node id below the capacity has a
/// stored key at all times. A node can be parked (removed from the heap order
/// but retaining its key) and unparked later; parked nodes are how the
/// exchange loop marks "already placed" entries without losing them.
///
/// MaxAtTop=true keeps the strongest (score desc, id asc) entry at the top;
/// MaxAtTop=false keeps the weakest (score asc, id desc) at the top.
template <bool MaxAtTop>
class IndexedHeap {
 public:
  IndexedHeap() = default;
  explicit IndexedHeap(std::size_t capacity)
      : key_(capacity, 0), pos_(capacity, kNotInHeap) {}

  /// Heapifies all of 0..capacity-1 with the given keys in O(n).
  explicit IndexedHeap(const std::vector<Score>& keys)
      : key_(keys), pos_(keys.size()), heap_(keys.size()) {
    for (std::uint32_t i = 0; i < heap_.size(); ++i) heap_[i] = i;
    for (std::uint32_t i = 0; i < heap_.size(); ++i) pos_[i] = i;
    if (heap_.size() > 1)
      for (std::uint32_t i = static_cast<std::uint32_t>(heap_.size()) / 2; i-- > 0;)
        sift_down(i);
  }

  std::size_t capacity() const { return key_.size(); }
  std::size_t size() const { return heap_.size(); }
  bool empty() const { return heap_.empty(); }
  bool contains(NodeId v) const { return pos_.at(v) != kNotInHeap; }

  /// Last key set for v, whether or not v is currently in the heap.
  Score key_of(NodeId v) const { return key_.at(v); }

  /// The nodes currently in the heap, in unspecified (heap-array) order.
  /// Invalidated by any mutation.
  std::span<const NodeId> nodes() const { return heap_; }

  NodeId top() const {
    if (heap_.empty()) throw std::logic_error("indexed heap: top of empty heap");
    return heap_.front();
  }
  Score top_key() const { return key_[top()]; }

  void push(NodeId v, Score key) {
    if (contains(v)) throw std::logic_error("indexed heap: duplicate push");
    key_[v] = key;
    pos_[v] = static_cast<std::uint32_t>(heap_.size());
    heap_.push_back(v);
    sift_up(pos_[v]);
  }

  NodeId pop_top() {
    const NodeId v = top();
    erase(v);
    return v;
  }

  /// Removes v from the heap order; its key remains readable via key_of.
  void erase(NodeId v) {
    const auto p = pos_.at(v);
    if (p == kNotInHeap) throw std::logic_error("indexed heap: erase of absent node");
    const auto last = static_cast<std::uint32_t>(heap_.size() - 1);
    if (p != last) {
      swap_slots(p, last);
      heap_.pop_back();
      pos_[v] = kNotInHeap;
      sift_down(p);
      sift_up(p);
    } else {
      heap_.pop_back();
      pos_[v] = kNotInHeap;
    }
  }

  /// Sets v's key, restoring heap order. v may be parked, in which case only
  /// the stored key changes.
  void update(NodeId v, Score key) {
    key_.at(v) = key;
    const auto p = pos_[v];
    if (p == kNotInHeap) return;
    sift_down(p);
    sift_up(pos_[v]);
  }

 private:
  static constexpr std::uint32_t kNotInHeap = 0xffffffff;

  bool before(NodeId a, NodeId b) const {
    if constexpr (MaxAtTop)
      return stronger(key_[a], a, key_[b], b);
    else
      return stronger(key_[b], b, key_[a], a);
  }

  void swap_slots(std::uint32_t i, std::uint32_t j) {
    std::swap(heap_[i], heap_[j]);
    pos_[heap_[i]] = i;
    pos_[heap_[j]] = j;
  }

  void sift_up(std::uint32_t i) {
    while (i > 0) {
      const std::uint32_t parent = (i - 1) / 2;
      if (!before(heap_[i], heap_[parent])) break;
      swap_slots(i, parent);
      i = parent;
    }
  }

  void sift_down(std::uint32_t i) {
    const auto n = static_cast<std::uint32_t>(heap_.size());
    while (true) {
      std::uint32_t best = i;
      const std::uint32_t l = 2 * i + 1, r = 2 * i + 2;
      if (l < n && before(heap_[l], heap_[best])) best = l;
      if (r < n && before(heap_[r], heap_[best])) best = r;
      if (best == i) return;
      swap_slots(i, best);
      i = best;
    }
  }

  std::vector<Score> key_;
  std::vector<std::uint32_t> pos_;
  std::vector<NodeId> heap_;
};

/// Max-heap score queue Q: strongest candidate on top.
using MaxScoreHeap = IndexedHeap<true>;
/// Min-heap over the tracked spanners: weakest member on top.
using MinScoreHeap = IndexedHeap<false>;

}  // namespace shs
