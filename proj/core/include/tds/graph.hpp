#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tds {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Bijection on [0, n). Entry i is the image of node i.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InputError unless `map` is a bijection on [0, map.size()).
  explicit Permutation(std::vector<NodeId> map);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return map_.size(); }
  NodeId operator[](NodeId i) const { return map_[i]; }
  std::span<const NodeId> map() const noexcept { return map_; }

  Permutation inverse() const;

  /// (this ∘ first)(i) = this[first[i]].
  Permutation after(const Permutation& first) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<NodeId> map_;
};

/// Immutable undirected simple graph in compressed sparse row form.
///
/// Invariants: adjacency is symmetric, self-loop free, and every neighbor list
/// is strictly increasing. Safe to share read-only across threads.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  std::size_t num_nodes() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId i) const {
    return {targets_.data() + offsets_[i], targets_.data() + offsets_[i + 1]};
  }
  std::size_t degree(NodeId i) const { return offsets_[i + 1] - offsets_[i]; }

  bool has_edge(NodeId i, NodeId j) const;

  /// Every edge once as (i, j) with i < j, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

/// Builds a graph on n nodes. Self-loops are dropped and parallel edges (in
/// either orientation) collapse to one. Throws InputError on an endpoint
/// outside [0, n).
Graph build_graph(std::size_t n, std::span<const Edge> edges);

inline std::size_t degree(const Graph& g, NodeId i) { return g.degree(i); }

/// Breadth-first layering from a root, reusing its scratch space between
/// calls. One instance per thread.
class LayeredBfs {
 public:
  explicit LayeredBfs(const Graph& g);

  /// Layers 1..max_depth of the BFS from `root`: layers()[t - 1] holds the
  /// nodes at shortest-path distance exactly t, in discovery order.
  /// Layers beyond the eccentricity of `root` come back empty.
  const std::vector<std::vector<NodeId>>& run(NodeId root, unsigned max_depth);

  const std::vector<std::vector<NodeId>>& layers() const noexcept { return layers_; }

 private:
  const Graph* graph_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<std::vector<NodeId>> layers_;
};

/// Nodes at shortest-path distance exactly t >= 1 from i, ascending.
std::vector<NodeId> neighbors_at_distance(const Graph& g, NodeId i, unsigned t);

/// Number of unordered pairs {i, j} that are an edge in exactly one of g_a and
/// the pull-back of g_b through m, i.e. (1/2)||A(g_b) - P^T A(g_a) P||_F^2.
/// Throws InputError when the graphs or the permutation disagree in size.
std::size_t edge_disagreement(const Graph& g_a, const Graph& g_b, const Permutation& m);

}  // namespace tds
