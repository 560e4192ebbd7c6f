#pragma once

#include <vector>

#include "shs/graph.hpp"

namespace shs::test {

// Path 0-1-2-...-(n-1).
inline UndirectedGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return UndirectedGraph(n, edges);
}

// Cycle on n nodes.
inline UndirectedGraph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(static_cast<NodeId>(n - 1), 0);
  return UndirectedGraph(n, edges);
}

inline UndirectedGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u + 1 < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return UndirectedGraph(n, edges);
}

// Star with center 0 and n-1 leaves.
inline UndirectedGraph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) edges.emplace_back(0, v);
  return UndirectedGraph(n, edges);
}

// Two triangles sharing only the cut vertex 2: {0,1,2} and {2,3,4}.
inline UndirectedGraph two_triangles_cut_vertex() {
  return UndirectedGraph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Two K4s {0..3} and {6..9} joined by the path 3-4-5-6.
inline UndirectedGraph barbell_graph() {
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                          {3, 4}, {4, 5}, {5, 6},
                          {6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}};
  return UndirectedGraph(10, edges);
}

// Thirteen-node network with two components: {a..e} and {f,g,k,l,h,i,j,m},
// where (g,h) is the bridge between the {f,g,k,l} and {h,i,j,m} halves.
// Node letters map to ids a=0 b=1 c=2 d=3 e=4 f=5 g=6 h=7 i=8 j=9 k=10 l=11
// m=12.
struct TwoHalvesNetwork {
  static constexpr NodeId a = 0, b = 1, c = 2, d = 3, e = 4, f = 5, g = 6, h = 7, i = 8,
                          j = 9, k = 10, l = 11, m = 12;

  static UndirectedGraph make() {
    std::vector<Edge> edges{
        {a, b}, {a, c}, {b, c}, {c, d}, {d, e},        // left component
        {f, g}, {f, k}, {k, l}, {g, l},                // g's half
        {g, h},                                        // the bridge
        {h, i}, {i, j}, {j, m}, {h, j},                // h's half
    };
    return UndirectedGraph(13, edges);
  }
};

}  // namespace shs::test
