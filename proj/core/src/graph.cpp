#include "tds/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tds/error.hpp"

namespace tds {

Permutation::Permutation(std::vector<NodeId> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (NodeId v : map_) {
    if (v >= map_.size() || seen[v]) {
      throw InputError("permutation is not a bijection on [0, " +
                       std::to_string(map_.size()) + ")");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<NodeId> map(n);
  std::iota(map.begin(), map.end(), NodeId{0});
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<NodeId> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = static_cast<NodeId>(i);
  Permutation out;
  out.map_ = std::move(inv);
  return out;
}

Permutation Permutation::after(const Permutation& first) const {
  if (first.size() != size()) throw InputError("permutation sizes differ");
  std::vector<NodeId> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = map_[first.map_[i]];
  Permutation p;
  p.map_ = std::move(out);
  return p;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::size_t> count(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) continue;
    ++count[u + 1];
    ++count[v + 1];
  }
  std::partial_sum(count.begin(), count.end(), count.begin());

  std::vector<NodeId> targets(count[n]);
  std::vector<std::size_t> cursor(count.begin(), count.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    targets[cursor[u]++] = v;
    targets[cursor[v]++] = u;
  }

  // Sort and dedup each row, compacting in place.
  Graph g;
  g.offsets_.assign(n + 1, 0);
  std::size_t write = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto first = targets.begin() + static_cast<std::ptrdiff_t>(count[i]);
    auto last = targets.begin() + static_cast<std::ptrdiff_t>(count[i + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    for (auto it = first; it != last; ++it) targets[write++] = *it;
    g.offsets_[i + 1] = write;
  }
  targets.resize(write);
  targets.shrink_to_fit();
  g.targets_ = std::move(targets);
  return g;
}

bool Graph::has_edge(NodeId i, NodeId j) const {
  auto row = neighbors(i);
  return std::binary_search(row.begin(), row.end(), j);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId i = 0; i < num_nodes(); ++i) {
    for (NodeId j : neighbors(i)) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

LayeredBfs::LayeredBfs(const Graph& g) : graph_(&g), stamp_(g.num_nodes(), 0) {}

const std::vector<std::vector<NodeId>>& LayeredBfs::run(NodeId root, unsigned max_depth) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  layers_.resize(max_depth);
  for (auto& layer : layers_) layer.clear();

  stamp_[root] = epoch_;
  std::span<const NodeId> frontier(&root, 1);
  for (unsigned t = 0; t < max_depth && !frontier.empty(); ++t) {
    auto& next = layers_[t];
    for (NodeId u : frontier) {
      for (NodeId v : graph_->neighbors(u)) {
        if (stamp_[v] != epoch_) {
          stamp_[v] = epoch_;
          next.push_back(v);
        }
      }
    }
    frontier = next;
  }
  return layers_;
}

std::vector<NodeId> neighbors_at_distance(const Graph& g, NodeId i, unsigned t) {
  if (i >= g.num_nodes()) throw InputError("node id out of range");
  if (t == 0) throw InputError("distance must be at least 1");
  LayeredBfs bfs(g);
  auto layer = bfs.run(i, t)[t - 1];
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::size_t edge_disagreement(const Graph& g_a, const Graph& g_b, const Permutation& m) {
  const std::size_t n = g_a.num_nodes();
  if (g_b.num_nodes() != n || m.size() != n) {
    throw InputError("edge_disagreement: graphs and mapping must have equal size (" +
                     std::to_string(n) + ", " + std::to_string(g_b.num_nodes()) + ", " +
                     std::to_string(m.size()) + ")");
  }
  // |E_a \ m^{-1}(E_b)| + |E_b \ m(E_a)|; the second term is |E_b| minus the
  // number of edges counted as shared in the first pass.
  std::size_t missing_in_b = 0;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j : g_a.neighbors(i)) {
      if (i < j && !g_b.has_edge(m[i], m[j])) ++missing_in_b;
    }
  }
  const std::size_t shared = g_a.num_edges() - missing_in_b;
  return missing_in_b + (g_b.num_edges() - shared);
}

}  // namespace tds
