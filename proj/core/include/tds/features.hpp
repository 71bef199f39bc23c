#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tds/graph.hpp"

namespace tds {

using Feature = std::int32_t;

/// theta: how many of the smallest and of the largest degrees are kept per
/// distance layer. lambda: deepest distance layer used.
struct FeatureConfig {
  unsigned theta = 10;
  unsigned lambda = 2;
  Feature pad_value = 0;

  std::size_t width() const noexcept { return 2u * theta * lambda; }
  /// Throws InputError when theta or lambda is zero.
  void validate() const;
};

/// Row-major n x width matrix of tail degree signatures.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(std::size_t rows, std::size_t width, Feature fill = 0)
      : rows_(rows), width_(width), data_(rows * width, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t width() const noexcept { return width_; }

  std::span<const Feature> row(std::size_t i) const { return {data_.data() + i * width_, width_}; }
  std::span<Feature> row(std::size_t i) { return {data_.data() + i * width_, width_}; }

  friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t width_ = 0;
  std::vector<Feature> data_;
};

/// Dense rows x cols matrix of Euclidean distances between signatures.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  SimilarityMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Degrees of the nodes at distance exactly t from i, with multiplicity.
std::vector<std::uint32_t> layer_degrees(const Graph& g, NodeId i, unsigned t);

/// theta smallest followed by theta largest entries of `degrees`, each half
/// ascending. A layer with fewer than 2*theta entries contributes overlapping
/// halves; each half is padded at its tail to length theta with `pad_value`.
std::vector<Feature> tail_select(std::span<const std::uint32_t> degrees, unsigned theta,
                                 Feature pad_value);

/// Concatenation of tail_select over layers t = 1..lambda.
std::vector<Feature> extract_feature(const Graph& g, NodeId i, const FeatureConfig& cfg);

/// extract_feature for every node. threads == 0 picks hardware concurrency;
/// the result does not depend on the thread count.
FeatureMatrix extract_all(const Graph& g, const FeatureConfig& cfg, unsigned threads = 0);

/// X(i, j) = || fa[i] - fb[j] ||_2. Throws InputError on width mismatch.
SimilarityMatrix similarity_matrix(const FeatureMatrix& fa, const FeatureMatrix& fb,
                                   unsigned threads = 0);

/// One CSV row per node: "node,f0,f1,...". Debug output only.
void write_features_csv(std::ostream& os, const FeatureMatrix& features);

}  // namespace tds
