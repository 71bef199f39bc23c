#include "tds/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "tds/error.hpp"

namespace tds {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

bool PreparedAlignment::degenerate() const {
  const auto all_equal = [](const FeatureMatrix& f, std::span<const Feature> ref) {
    for (std::size_t i = 0; i < f.rows(); ++i) {
      if (!std::ranges::equal(f.row(i), ref)) return false;
    }
    return true;
  };
  if (features_a.rows() == 0) return true;
  const auto ref = features_a.row(0);
  return all_equal(features_a, ref) && all_equal(features_b, ref);
}

PreparedAlignment prepare_alignment(const Graph& a, const Graph& b, const FeatureConfig& cfg,
                                    unsigned threads) {
  if (a.num_nodes() != b.num_nodes()) {
    throw InputError("graphs differ in size: " + std::to_string(a.num_nodes()) + " vs " +
                     std::to_string(b.num_nodes()) + " nodes");
  }
  PreparedAlignment out;
  auto start = Clock::now();
  out.features_a = extract_all(a, cfg, threads);
  out.features_b = extract_all(b, cfg, threads);
  out.t_feature_ms = ms_since(start);
  start = Clock::now();
  out.distances = similarity_matrix(out.features_a, out.features_b, threads);
  out.t_matrix_ms = ms_since(start);
  return out;
}

AlignmentResult align(const PreparedAlignment& prepared, Matcher method) {
  const auto start = Clock::now();
  AlignmentResult out{solve(prepared.distances, method), prepared.t_feature_ms,
                      prepared.t_matrix_ms, 0.0};
  out.t_assign_ms = ms_since(start);
  return out;
}

AlignmentResult align(const Graph& a, const Graph& b, const FeatureConfig& cfg, Matcher method,
                      unsigned threads) {
  return align(prepare_alignment(a, b, cfg, threads), method);
}

}  // namespace tds
