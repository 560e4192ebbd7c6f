#include <doctest.h>

#include "fixtures.hpp"
#include "shs/oracle.hpp"
#include "shs/static_spanner.hpp"
#include "shs/synthetic.hpp"

using namespace shs;
namespace fx = shs::test;

TEST_CASE("5-path: the middle node wins with score 8") {
  // P = 10; removing node 2 leaves the pairs {0,1} and {3,4}.
  const auto result = top_k_greedy(fx::path_graph(5), 1);
  REQUIRE(result.spanners.size() == 1);
  CHECK(result.spanners[0] == SpannerEntry{2, 8});
}

TEST_CASE("two joined triangles: the cut vertex wins") {
  const auto g = fx::two_triangles_cut_vertex();
  const auto result = top_k_greedy(g, 1);
  CHECK(result.spanners[0].node == 2);
  // Cross-check against exhaustive search.
  CHECK(oracle::brute_force_topk(g, 1).nodes == std::vector<NodeId>{2});
}

TEST_CASE("K4 with k=2: ids break the all-equal ties, residual is one edge") {
  const auto result = top_k_greedy(fx::complete_graph(4), 2);
  REQUIRE(result.spanners.size() == 2);
  CHECK(result.spanners[0] == SpannerEntry{0, 3});
  CHECK(result.spanners[1] == SpannerEntry{1, 2});
  CHECK(oracle::residual_connectivity(fx::complete_graph(4),
                                      std::vector<NodeId>{0, 1}) == 1);
}

TEST_CASE("k out of range is rejected") {
  CHECK_THROWS_AS(top_k_greedy(fx::path_graph(3), 0), std::invalid_argument);
  CHECK_THROWS_AS(top_k_greedy(fx::path_graph(3), 4), std::invalid_argument);
}

TEST_CASE("the input graph is never mutated") {
  const auto g = fx::barbell_graph();
  const auto before = g.edges();
  top_k_greedy(g, 3);
  CHECK(g.edges() == before);
}

TEST_CASE("k=1 equals the brute-force argmin over single removals") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto g = gnm_graph(12, 4 + seed % 15, seed);
    const auto greedy = top_k_greedy(g, 1);
    const auto best = oracle::brute_force_topk(g, 1);
    CHECK(greedy.spanners[0].node == best.nodes[0]);
    CHECK(oracle::residual_connectivity(g, std::vector<NodeId>{greedy.spanners[0].node}) ==
          best.residual_connectivity);
  }
}

TEST_CASE("selection scores telescope down to the residual connectivity") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gnp_graph(40, 0.07, seed);
    const std::size_t k = 1 + seed % 5;
    const auto result = top_k_greedy(g, k);

    Score claimed = total_pairwise_connectivity(g);
    std::vector<NodeId> removed;
    for (const auto& e : result.spanners) {
      claimed -= e.score;
      removed.push_back(e.node);
    }
    CHECK(claimed == oracle::residual_connectivity(g, removed));
  }
}

TEST_CASE("residual score table matches the oracle on the residual graph") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = gnm_graph(25, 45, seed + 42);
    const auto result = top_k_greedy(g, 3);

    WorkingGraph residual(g);
    std::vector<char> is_removed(g.node_count(), 0);
    for (const auto& e : result.spanners) {
      residual.remove_node(e.node);
      is_removed[e.node] = 1;
    }
    const auto expect = detail::all_component_scores(residual);
    for (NodeId v = 0; v < g.node_count(); ++v)
      if (!is_removed[v]) CHECK(result.residual_scores[v] == expect[v]);
  }
}

TEST_CASE("identical inputs give identical spanner sets") {
  const auto g = gnm_graph(50, 120, 2024);
  const auto r1 = top_k_greedy(g, 5);
  const auto r2 = top_k_greedy(g, 5);
  CHECK(r1.spanners == r2.spanners);
  CHECK(r1.residual_scores == r2.residual_scores);
}
