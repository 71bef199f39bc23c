#pragma once

#include <cstddef>

#include "tds/assign.hpp"
#include "tds/features.hpp"
#include "tds/graph.hpp"

namespace tds {

/// Signatures of both graphs and their distance matrix, ready for a solver.
struct PreparedAlignment {
  FeatureMatrix features_a;
  FeatureMatrix features_b;
  SimilarityMatrix distances;
  double t_feature_ms = 0.0;
  double t_matrix_ms = 0.0;

  /// True when every node of both graphs carries the same signature, so any
  /// bijection is optimal and accuracy carries no information.
  bool degenerate() const;
};

/// Throws InputError when the graphs differ in node count.
PreparedAlignment prepare_alignment(const Graph& a, const Graph& b, const FeatureConfig& cfg,
                                    unsigned threads = 0);

struct AlignmentResult {
  Matching matching;
  double t_feature_ms = 0.0;
  double t_matrix_ms = 0.0;
  double t_assign_ms = 0.0;
};

AlignmentResult align(const PreparedAlignment& prepared, Matcher method);
AlignmentResult align(const Graph& a, const Graph& b, const FeatureConfig& cfg, Matcher method,
                      unsigned threads = 0);

/// Hungarian up to 2000 nodes, greedy above.
inline Matcher default_matcher(std::size_t n) {
  return n <= 2000 ? Matcher::hungarian : Matcher::greedy;
}

}  // namespace tds
