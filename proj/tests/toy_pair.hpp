#pragma once

// A 25-node pair consistent with the worked example used throughout the
// tests: in G_a node 18 has distance-1 neighbors {15, 12, 21, 2, 20} with
// degrees {2, 1, 1, 2, 2} and distance-2 neighbors {3, 24} with degrees
// {4, 2}; node 5 has signature [1, 3, 1, 3]. G_b is G_a plus the edge
// {24, 13}, relabeled by swapping 18 <-> 9 and 5 <-> 12, so that with
// theta = 1, lambda = 2 node 9 of G_b reads [1, 2, 3, 4] and node 12 reads
// [1, 3, 1, 3].

#include <vector>

#include "tds/graph.hpp"
#include "tds/synth.hpp"

namespace tds::toy {

inline constexpr std::size_t kNodes = 25;

inline std::vector<Edge> edges_a() {
  return {
      {18, 15}, {18, 12}, {18, 21}, {18, 2}, {18, 20},  // around 18
      {15, 3},  {2, 3},   {20, 24}, {3, 0},  {3, 1},  {24, 4},
      {5, 6},   {5, 7},   {7, 8},   {7, 9},  {9, 10}, {9, 11},  // around 5
      {13, 14}, {14, 16}, {16, 17}, {17, 19}, {19, 22}, {22, 23},
  };
}

inline Permutation relabel() {
  std::vector<NodeId> map(kNodes);
  for (NodeId i = 0; i < kNodes; ++i) map[i] = i;
  std::swap(map[18], map[9]);
  std::swap(map[5], map[12]);
  return Permutation(std::move(map));
}

inline Graph graph_a() {
  const auto e = edges_a();
  return build_graph(kNodes, e);
}

inline Graph graph_b() {
  auto e = edges_a();
  e.emplace_back(24, 13);
  return permute_graph(build_graph(kNodes, e), relabel());
}

}  // namespace tds::toy
