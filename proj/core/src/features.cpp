#include "tds/features.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <thread>

#include "tds/error.hpp"

namespace tds {
namespace {

unsigned resolve_threads(unsigned requested, std::size_t work) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

/// Runs body(begin, end) over contiguous chunks of [0, count).
template <class Body>
void parallel_chunks(std::size_t count, unsigned threads, Body body) {
  if (threads <= 1) {
    body(std::size_t{0}, count);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t begin = std::min(count, w * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    if (begin == end) break;
    workers.emplace_back([&body, begin, end] { body(begin, end); });
  }
}

void tail_select_into(std::vector<std::uint32_t>& degrees, unsigned theta, Feature pad,
                      std::span<Feature> out) {
  std::sort(degrees.begin(), degrees.end());
  const std::size_t k = std::min<std::size_t>(theta, degrees.size());
  auto low = out.subspan(0, theta);
  auto high = out.subspan(theta, theta);
  std::fill(out.begin(), out.end(), pad);
  for (std::size_t q = 0; q < k; ++q) {
    low[q] = static_cast<Feature>(degrees[q]);
    high[q] = static_cast<Feature>(degrees[degrees.size() - k + q]);
  }
}

void signature_into(const Graph& g, LayeredBfs& bfs, std::vector<std::uint32_t>& scratch,
                    NodeId i, const FeatureConfig& cfg, std::span<Feature> out) {
  const auto& layers = bfs.run(i, cfg.lambda);
  for (unsigned t = 0; t < cfg.lambda; ++t) {
    scratch.clear();
    for (NodeId v : layers[t]) scratch.push_back(static_cast<std::uint32_t>(g.degree(v)));
    tail_select_into(scratch, cfg.theta, cfg.pad_value, out.subspan(2u * cfg.theta * t, 2u * cfg.theta));
  }
}

}  // namespace

void FeatureConfig::validate() const {
  if (theta == 0) throw InputError("theta must be at least 1");
  if (lambda == 0) throw InputError("lambda must be at least 1");
}

std::vector<std::uint32_t> layer_degrees(const Graph& g, NodeId i, unsigned t) {
  std::vector<std::uint32_t> out;
  for (NodeId v : neighbors_at_distance(g, i, t)) out.push_back(static_cast<std::uint32_t>(g.degree(v)));
  return out;
}

std::vector<Feature> tail_select(std::span<const std::uint32_t> degrees, unsigned theta,
                                 Feature pad_value) {
  if (theta == 0) throw InputError("theta must be at least 1");
  std::vector<std::uint32_t> sorted(degrees.begin(), degrees.end());
  std::vector<Feature> out(2u * theta);
  tail_select_into(sorted, theta, pad_value, out);
  return out;
}

std::vector<Feature> extract_feature(const Graph& g, NodeId i, const FeatureConfig& cfg) {
  cfg.validate();
  if (i >= g.num_nodes()) throw InputError("node id out of range");
  std::vector<Feature> out(cfg.width());
  LayeredBfs bfs(g);
  std::vector<std::uint32_t> scratch;
  signature_into(g, bfs, scratch, i, cfg, out);
  return out;
}

FeatureMatrix extract_all(const Graph& g, const FeatureConfig& cfg, unsigned threads) {
  cfg.validate();
  const std::size_t n = g.num_nodes();
  FeatureMatrix out(n, cfg.width(), cfg.pad_value);
  parallel_chunks(n, resolve_threads(threads, n / 256), [&](std::size_t begin, std::size_t end) {
    LayeredBfs bfs(g);
    std::vector<std::uint32_t> scratch;
    for (std::size_t i = begin; i < end; ++i) {
      signature_into(g, bfs, scratch, static_cast<NodeId>(i), cfg, out.row(i));
    }
  });
  return out;
}

SimilarityMatrix similarity_matrix(const FeatureMatrix& fa, const FeatureMatrix& fb,
                                   unsigned threads) {
  if (fa.width() != fb.width()) {
    throw InputError("similarity_matrix: feature widths differ (" + std::to_string(fa.width()) +
                     " vs " + std::to_string(fb.width()) + ")");
  }
  SimilarityMatrix x(fa.rows(), fb.rows());
  const std::size_t w = fa.width();
  parallel_chunks(fa.rows(), resolve_threads(threads, fa.rows() / 64),
                  [&](std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      const auto a = fa.row(i);
                      for (std::size_t j = 0; j < fb.rows(); ++j) {
                        const auto b = fb.row(j);
                        // Integer accumulation is exact, so every cell is
                        // bit-reproducible.
                        std::int64_t acc = 0;
                        for (std::size_t q = 0; q < w; ++q) {
                          const std::int64_t d = std::int64_t{a[q]} - b[q];
                          acc += d * d;
                        }
                        x(i, j) = std::sqrt(static_cast<double>(acc));
                      }
                    }
                  });
  return x;
}

void write_features_csv(std::ostream& os, const FeatureMatrix& features) {
  os << "node";
  for (std::size_t q = 0; q < features.width(); ++q) os << ",f" << q;
  os << '\n';
  for (std::size_t i = 0; i < features.rows(); ++i) {
    os << i;
    for (Feature v : features.row(i)) os << ',' << v;
    os << '\n';
  }
}

}  // namespace tds
