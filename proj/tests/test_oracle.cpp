#include <doctest.h>

#include "fixtures.hpp"
#include "shs/oracle.hpp"
#include "shs/synthetic.hpp"

using namespace shs;
namespace fx = shs::test;

TEST_CASE("score oracle on an edgeless graph is all zeros") {
  UndirectedGraph g(4, std::initializer_list<Edge>{});
  CHECK(oracle::score_oracle(g) == ScoreTable{0, 0, 0, 0});
}

TEST_CASE("score oracle on a 3-path") {
  // P = 3; removing an endpoint leaves one edge, removing the middle leaves
  // two isolated nodes.
  CHECK(oracle::score_oracle(fx::path_graph(3)) == ScoreTable{2, 3, 2});
}

TEST_CASE("score oracle on a 4-cycle is uniform") {
  CHECK(oracle::score_oracle(fx::cycle_graph(4)) == ScoreTable{3, 3, 3, 3});
}

TEST_CASE("brute force on the 5-path picks the middle node") {
  const auto best = oracle::brute_force_topk(fx::path_graph(5), 1);
  CHECK(best.nodes == std::vector<NodeId>{2});
  CHECK(best.residual_connectivity == 2);  // {0,1} and {3,4}
}

TEST_CASE("brute force on two joined triangles picks the cut vertex") {
  const auto g = fx::two_triangles_cut_vertex();
  const auto best = oracle::brute_force_topk(g, 1);
  CHECK(best.nodes == std::vector<NodeId>{2});
  CHECK(best.residual_connectivity == 2);  // two surviving edges
  CHECK(oracle::residual_connectivity(g, best.nodes) == 2);
}

TEST_CASE("brute force on K5 with k=2 breaks ties lexicographically") {
  const auto best = oracle::brute_force_topk(fx::complete_graph(5), 2);
  CHECK(best.nodes == std::vector<NodeId>{0, 1});
  CHECK(best.residual_connectivity == 3);  // K3 remains
}

TEST_CASE("brute force size guards reject large instances") {
  CHECK_THROWS_AS(oracle::brute_force_topk(fx::path_graph(17), 1), std::invalid_argument);
  CHECK_THROWS_AS(oracle::brute_force_topk(fx::path_graph(10), 4), std::invalid_argument);
}

TEST_CASE("static_recompute delegates to the greedy identification") {
  const auto g = gnm_graph(20, 30, 7);
  CHECK(oracle::static_recompute(g, 3) == top_k_greedy(g, 3).spanners);
}
