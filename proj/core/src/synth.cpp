#include "tds/synth.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "tds/error.hpp"
#include "tds/rng.hpp"

namespace tds {
namespace {

void check_probability(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InputError(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
  }
}

Graph subsample(const Graph& g, double s, Rng& rng) {
  std::vector<Edge> kept;
  kept.reserve(static_cast<std::size_t>(static_cast<double>(g.num_edges()) * s) + 16);
  for (const auto& e : g.edges()) {
    if (rng.bernoulli(s)) kept.push_back(e);
  }
  return build_graph(g.num_nodes(), kept);
}

}  // namespace

std::string_view to_string(PMode mode) {
  switch (mode) {
    case PMode::explicit_p: return "explicit";
    case PMode::log_n: return "logn";
    case PMode::log2_n: return "log2n";
  }
  return "explicit";
}

PMode parse_p_mode(std::string_view text) {
  if (text == "explicit") return PMode::explicit_p;
  if (text == "logn") return PMode::log_n;
  if (text == "log2n") return PMode::log2_n;
  throw InputError("unknown p-mode '" + std::string(text) + "' (expected explicit, logn, log2n)");
}

double regime_probability(PMode mode, std::size_t n) {
  const double nn = static_cast<double>(n);
  const double l = std::log(nn);
  switch (mode) {
    case PMode::log_n: return l / nn;
    case PMode::log2_n: return l * l / nn;
    case PMode::explicit_p: break;
  }
  throw InputError("regime_probability: explicit mode has no regime");
}

double CorrelatedErConfig::edge_probability() const {
  return p_mode == PMode::explicit_p ? p : regime_probability(p_mode, n);
}

void CorrelatedErConfig::validate() const {
  if (n < 2) throw InputError("n must be at least 2");
  check_probability(edge_probability(), "p");
  check_probability(s, "s");
}

Graph generate_parent(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p, "p");
  Rng rng(seed, Stream::parent_edges);
  std::vector<Edge> edges;
  const double expected = p * static_cast<double>(n) * static_cast<double>(n - (n > 0)) / 2.0;
  edges.reserve(static_cast<std::size_t>(expected * 1.1) + 16);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
    }
  }
  return build_graph(n, edges);
}

std::pair<Graph, Graph> sample_child_pair(const Graph& parent, double s, std::uint64_t seed) {
  check_probability(s, "s");
  Rng rng_a(seed, Stream::child_a_mask);
  Rng rng_b(seed, Stream::child_b_mask);
  return {subsample(parent, s, rng_a), subsample(parent, s, rng_b)};
}

Graph permute_graph(const Graph& g, const Permutation& perm) {
  if (perm.size() != g.num_nodes()) {
    throw InputError("permute_graph: permutation length " + std::to_string(perm.size()) +
                     " != node count " + std::to_string(g.num_nodes()));
  }
  auto edges = g.edges();
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  return build_graph(g.num_nodes(), edges);
}

Permutation random_permutation(std::size_t n, std::uint64_t seed) {
  Rng rng(seed, Stream::permutation);
  std::vector<NodeId> map(n);
  std::iota(map.begin(), map.end(), NodeId{0});
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(map[i - 1], map[j]);
  }
  return Permutation(std::move(map));
}

GraphPair generate_pair(const CorrelatedErConfig& config) {
  config.validate();
  Graph parent = generate_parent(config.n, config.edge_probability(), config.seed);
  auto [child_a, child_b] = sample_child_pair(parent, config.s, config.seed);
  Permutation truth = random_permutation(config.n, config.seed);
  Graph b = permute_graph(child_b, truth);
  return {std::move(child_a), std::move(b), std::move(truth)};
}

GraphPair perturb_real(const Graph& g, double s, std::uint64_t seed) {
  check_probability(s, "s");
  Rng rng(seed, Stream::child_b_mask);
  Graph kept = subsample(g, s, rng);
  Permutation truth = random_permutation(g.num_nodes(), seed);
  return {g, permute_graph(kept, truth), std::move(truth)};
}

}  // namespace tds
