#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>

#include "tds/graph.hpp"

namespace tds {

/// How the parent edge probability is chosen.
enum class PMode { explicit_p, log_n, log2_n };

std::string_view to_string(PMode mode);
/// Accepts "explicit", "logn", "log2n". Throws InputError otherwise.
PMode parse_p_mode(std::string_view text);

/// log(n)/n or log(n)^2/n (natural log).
double regime_probability(PMode mode, std::size_t n);

struct CorrelatedErConfig {
  std::size_t n = 1000;
  double p = 0.0;  // used only when p_mode == explicit_p
  double s = 1.0;
  std::uint64_t seed = 0;
  PMode p_mode = PMode::explicit_p;

  /// Effective parent edge probability.
  double edge_probability() const;
  /// Throws InputError unless n >= 2 and p, s lie in [0, 1].
  void validate() const;
};

struct GraphPair {
  Graph a;
  Graph b;
  Permutation truth;  // node of a -> node of b
};

/// G(n, p): each of the C(n, 2) pairs, enumerated (i < j) lexicographically,
/// is an edge with probability p.
Graph generate_parent(std::size_t n, double p, std::uint64_t seed);

/// Two independent edge subsamples of `parent`, each edge kept with
/// probability s. Masks come from separate streams, so A does not depend on
/// the B draws and neither perturbs the parent.
std::pair<Graph, Graph> sample_child_pair(const Graph& parent, double s, std::uint64_t seed);

/// Relabels node i as perm[i].
Graph permute_graph(const Graph& g, const Permutation& perm);

/// Uniform draw from S_n (Fisher-Yates).
Permutation random_permutation(std::size_t n, std::uint64_t seed);

/// Correlated Erdős–Rényi pair: a = child A, b = child B relabeled by a
/// uniformly random truth permutation.
GraphPair generate_pair(const CorrelatedErConfig& config);

/// Noisy relabeled copy of a real network: a = g, b = edge-subsample of g
/// (keep probability s) relabeled by a random truth permutation.
GraphPair perturb_real(const Graph& g, double s, std::uint64_t seed);

}  // namespace tds
