#include "shs/synthetic.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace shs {

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bounded_draw: zero bound");
  const std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

UndirectedGraph gnp_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto cutoff = static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53
  std::vector<Edge> edges;
  for (NodeId u = 0; u + 1 < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if ((rng() >> 11) < cutoff) edges.emplace_back(u, v);
  return UndirectedGraph(n, edges);
}

UndirectedGraph gnm_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2 || m > n * (n - 1) / 2)
    throw std::invalid_argument("gnm_graph: m exceeds the simple-graph capacity");
  std::mt19937_64 rng(seed);
  std::set<Edge> picked;
  while (picked.size() < m) {
    auto u = static_cast<NodeId>(bounded_draw(rng, n));
    auto v = static_cast<NodeId>(bounded_draw(rng, n));
    if (u == v) continue;
    picked.insert({std::min(u, v), std::max(u, v)});
  }
  std::vector<Edge> edges(picked.begin(), picked.end());
  return UndirectedGraph(n, edges);
}

UndirectedGraph community_graph(std::size_t n, std::size_t m, std::size_t communities,
                                std::size_t communities_per_cluster, std::uint64_t seed) {
  if (communities == 0 || communities_per_cluster == 0 || communities > n)
    throw std::invalid_argument("community_graph: bad community layout");
  std::mt19937_64 rng(seed);

  // Contiguous node ranges per community, sizes as even as possible.
  std::vector<std::pair<NodeId, NodeId>> range(communities);  // [first, last)
  const std::size_t base = n / communities, extra = n % communities;
  NodeId next = 0;
  for (std::size_t c = 0; c < communities; ++c) {
    const auto size = static_cast<NodeId>(base + (c < extra ? 1 : 0));
    range[c] = {next, next + size};
    next += size;
  }

  std::set<Edge> picked;
  auto add_pair = [&](NodeId u, NodeId v) {
    if (u == v) return false;
    return picked.insert({std::min(u, v), std::max(u, v)}).second;
  };

  // A spanning path per community keeps every community connected.
  for (const auto& [first, last] : range)
    for (NodeId v = first; v + 1 < last; ++v) add_pair(v, v + 1);

  // Chain the communities of each cluster through one gateway node per link;
  // the gateway gets two edges into the next community, making it the link's
  // sole articulation hub.
  for (std::size_t c = 0; c + 1 < communities; ++c) {
    if ((c + 1) % communities_per_cluster == 0) continue;  // cluster boundary
    const auto [af, al] = range[c];
    const auto [bf, bl] = range[c + 1];
    const auto gateway = static_cast<NodeId>(af + bounded_draw(rng, al - af));
    add_pair(gateway, static_cast<NodeId>(bf + bounded_draw(rng, bl - bf)));
    add_pair(gateway, static_cast<NodeId>(bf + bounded_draw(rng, bl - bf)));
  }
  if (picked.size() > m)
    throw std::invalid_argument("community_graph: m too small for the community scaffold");

  // Spend the rest inside communities, weighted by community pair capacity.
  std::vector<std::uint64_t> pair_cap(communities);
  std::uint64_t total_cap = 0;
  for (std::size_t c = 0; c < communities; ++c) {
    const std::uint64_t s = range[c].second - range[c].first;
    pair_cap[c] = s * (s - 1) / 2;
    total_cap += pair_cap[c];
  }
  if (total_cap + picked.size() < m)
    throw std::invalid_argument("community_graph: m exceeds intra-community capacity");

  while (picked.size() < m) {
    std::uint64_t t = bounded_draw(rng, total_cap);
    std::size_t c = 0;
    while (t >= pair_cap[c]) t -= pair_cap[c++];
    const auto [first, last] = range[c];
    const std::uint64_t span = last - first;
    add_pair(static_cast<NodeId>(first + bounded_draw(rng, span)),
             static_cast<NodeId>(first + bounded_draw(rng, span)));
  }

  std::vector<Edge> edges(picked.begin(), picked.end());
  return UndirectedGraph(n, edges);
}

}  // namespace shs
