#pragma once

#include <cstdint>
#include <random>

#include "shs/graph.hpp"

namespace shs {

/// Unbiased draw from [0, bound) fully pinned by the engine state.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound);

/// Erdos-Renyi G(n, p): each of the n(n-1)/2 pairs is an edge independently.
UndirectedGraph gnp_graph(std::size_t n, double p, std::uint64_t seed);

/// Uniform G(n, m): exactly m distinct edges.
UndirectedGraph gnm_graph(std::size_t n, std::size_t m, std::uint64_t seed);

/// Community-structured graph used as the large-dataset stand-in: nodes are
/// split into communities, communities are chained into clusters by single
/// bridge edges, and the remaining edge budget is spent inside communities.
/// Produces exactly m edges; one connected component per cluster.
UndirectedGraph community_graph(std::size_t n, std::size_t m, std::size_t communities,
                                std::size_t communities_per_cluster, std::uint64_t seed);

}  // namespace shs
