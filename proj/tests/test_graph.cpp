#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "shs/graph.hpp"
#include "shs/graph_io.hpp"
#include "shs/synthetic.hpp"

using namespace shs;
namespace fx = shs::test;
using Net = fx::TwoHalvesNetwork;

TEST_CASE("build keeps exactly the de-duplicated undirected edges") {
  UndirectedGraph path(3, {{0, 1}, {1, 2}});
  CHECK(path.node_count() == 3);
  CHECK(path.edge_count() == 2);

  UndirectedGraph dup(3, {{0, 1}, {1, 0}});
  CHECK(dup.edge_count() == 1);
  CHECK(dup.has_edge(0, 1));
  CHECK(dup.has_edge(1, 0));
  CHECK_FALSE(dup.has_edge(0, 2));
}

TEST_CASE("build rejects bad endpoints and self-loops") {
  CHECK_THROWS_AS(UndirectedGraph(3, {{0, 3}}), std::out_of_range);
  CHECK_THROWS_AS(UndirectedGraph(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("karate loads with the published size") {
  const auto loaded = load_graph_file(std::string(SHS_TEST_DATA_DIR) + "/karate.edges");
  CHECK(loaded.graph.node_count() == 34);
  CHECK(loaded.graph.edge_count() == 78);
}

TEST_CASE("delete_edge removes from both adjacency sets") {
  auto g = fx::path_graph(3);
  g.delete_edge(0, 1);
  CHECK(g.edge_count() == 1);
  CHECK(reachable_from(g, 0) == std::vector<NodeId>{0});
  CHECK_FALSE(g.has_edge(1, 0));
}

TEST_CASE("deleting a missing edge signals a malformed update stream") {
  auto g = fx::path_graph(3);
  g.delete_edge(0, 1);
  CHECK_THROWS_AS(g.delete_edge(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.delete_edge(0, 2), std::invalid_argument);
}

TEST_CASE("deleting the bridge splits the two-halves network as drawn") {
  auto g = Net::make();
  CHECK(g.edge_count() == 14);
  g.delete_edge(Net::g, Net::h);

  const auto idx = components(g);
  CHECK(idx.component_count == 3);
  CHECK(idx.label[Net::a] == idx.label[Net::e]);
  CHECK(idx.label[Net::f] == idx.label[Net::l]);
  CHECK(idx.label[Net::h] == idx.label[Net::m]);
  CHECK(idx.label[Net::g] != idx.label[Net::h]);
  CHECK(reachable_from(g, Net::h) == std::vector<NodeId>{Net::h, Net::i, Net::j, Net::m});
}

TEST_CASE("reachable_from covers exactly the connected nodes") {
  UndirectedGraph isolated(1, std::initializer_list<Edge>{});
  CHECK(reachable_from(isolated, 0) == std::vector<NodeId>{0});
  CHECK(reachable_from(fx::path_graph(3), 0) == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("components partition the node set") {
  UndirectedGraph edgeless(3, std::initializer_list<Edge>{});
  auto idx = components(edgeless);
  CHECK(idx.component_count == 3);
  CHECK(idx.sizes == std::vector<Score>{1, 1, 1});

  auto one = components(fx::path_graph(3));
  CHECK(one.component_count == 1);
  CHECK(one.sizes == std::vector<Score>{3});
}

TEST_CASE("bridge probe after deletion") {
  auto triangle = fx::complete_graph(3);
  triangle.delete_edge(0, 1);
  CHECK_FALSE(is_bridge_after_delete(triangle, 0, 1));

  auto path = fx::path_graph(3);
  path.delete_edge(0, 1);
  CHECK(is_bridge_after_delete(path, 0, 1));

  auto net = Net::make();
  net.delete_edge(Net::g, Net::h);
  CHECK(is_bridge_after_delete(net, Net::g, Net::h));
}

TEST_CASE("reachable set equals the component label class on random graphs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gnp_graph(40, 0.06, seed);
    const auto idx = components(g);
    for (NodeId s = 0; s < 40; s += 7) {
      const auto reach = reachable_from(g, s);
      std::vector<NodeId> labeled;
      for (NodeId v = 0; v < 40; ++v)
        if (idx.label[v] == idx.label[s]) labeled.push_back(v);
      CHECK(reach == labeled);
    }
  }
}

TEST_CASE("delete then re-add restores the adjacency structure") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = gnm_graph(30, 60, seed);
    const auto before = g.edges();
    g.delete_edge(before[5].first, before[5].second);
    g.add_edge(before[5].first, before[5].second);
    CHECK(g.edges() == before);
    CHECK(g.edge_count() == 60);
  }
}

TEST_CASE("a deletion is a bridge iff the component count grows by one") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    auto g = gnm_graph(25, 30, seed);
    const auto edges = g.edges();
    const auto before = components(g).component_count;
    const Edge target = edges[seed % edges.size()];
    g.delete_edge(target.first, target.second);
    const auto after = components(g).component_count;
    const bool bridge = is_bridge_after_delete(g, target.first, target.second);
    CHECK(after == before + (bridge ? 1 : 0));
  }
}

TEST_CASE("working graph masks nodes out of traversal") {
  const auto g = fx::path_graph(5);
  WorkingGraph w(g);
  w.remove_node(2);
  CHECK(reachable_from(w, 0) == std::vector<NodeId>{0, 1});
  CHECK(components(w).component_count == 2);
  w.restore_node(2);
  CHECK(components(w).component_count == 1);
}
