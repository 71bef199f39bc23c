#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tds/assign.hpp"
#include "tds/graph.hpp"
#include "tds/synth.hpp"

namespace tds {

/// Normal approximation of a child-graph degree: N(mu, sigma^2) with
/// mu = (n-1)ps and sigma^2 = (n-1)(1-ps)ps.
struct DegreeStats {
  double mu = 0.0;
  double sigma = 0.0;

  static DegreeStats for_model(std::size_t n, double p, double s);
};

/// (deg - mu) / sigma. Throws DegenerateParameters when sigma <= 0.
double normalize_degree(double deg, const DegreeStats& stats);

/// Correlation between matched normalized degrees, s(1-p)/(1-ps).
/// Throws InputError outside [0,1]^2 and DegenerateParameters when ps = 1.
double theoretical_rho(double p, double s);

struct RhoEstimate {
  double matched = 0.0;    // corr(U_i^a, U_{truth(i)}^b)
  double unmatched = 0.0;  // corr(U_i^a, U_j^b), j uniform over nodes != truth(i)
  std::size_t pairs = 0;   // pooled node pairs per estimate
};

/// Pearson correlations pooled over all nodes of `trials` generated pairs.
/// Trial k uses seed config.seed + k. Requires trials >= 30.
RhoEstimate empirical_rho(const CorrelatedErConfig& config, std::size_t trials);

/// Shared histogram grid: bins of `bin_width` over [-support_clip, support_clip],
/// out-of-range samples clamped into the end bins. A bin belongs to the tail
/// when |bin center| > threshold.
struct HistogramGrid {
  double bin_width = 0.25;
  double support_clip = 6.0;
  double threshold = 0.5;

  std::size_t bins() const;
  void validate() const;
};

enum class Region { tail, center };

/// Half the L1 distance between the two normalized histograms, summed over the
/// bins of `region`. Lies in [0, 1]; symmetric in its sample arguments.
/// Throws InputError when either sample list is empty.
double empirical_tv_region(std::span<const double> a, std::span<const double> b, Region region,
                           const HistogramGrid& grid = {});

/// Total-variation distance over the whole grid (tail + center).
double empirical_tv(std::span<const double> a, std::span<const double> b,
                    const HistogramGrid& grid = {});

struct TailScoreConfig {
  std::size_t n = 1000;
  double p = 0.0;
  PMode p_mode = PMode::log_n;
  std::vector<double> s_grid{0.5, 0.6, 0.7, 0.8, 0.9, 0.95};
  std::size_t samples_per_instance = 100;
  std::size_t instances = 100;
  HistogramGrid grid{};
  std::uint64_t seed = 0;

  double edge_probability() const;
  void validate() const;
};

struct TailScoreRow {
  double s = 0.0;
  double rho = 0.0;
  double mean_s_tail = 0.0;
  double mean_s_center = 0.0;
  std::size_t dropped_instances = 0;
  // Mean TV distances over kept instances.
  double delta_tail_matched = 0.0;
  double delta_tail_unmatched = 0.0;
  double delta_center_matched = 0.0;
  double delta_center_unmatched = 0.0;
  // Extremes over every instance, kept or dropped.
  double min_delta = 0.0;
  double max_delta = 0.0;
};

struct TailScoreReport {
  std::vector<TailScoreRow> rows;

  /// Mean over the grid of mean_s_tail divided by the same for mean_s_center.
  double tail_to_center_ratio() const;
};

/// Denominators below this drop the instance from the score means.
inline constexpr double kScoreDenominatorFloor = 1e-12;

/// For each s: per instance, draw samples U^a ~ N(0,1), a matched partner
/// rho*U^a + sqrt(1-rho^2)*Z with rho = theoretical_rho(p, s), and an
/// independent unmatched partner; score = Delta(matched) / Delta(unmatched)
/// in each region; report instance means.
TailScoreReport tail_center_scores(const TailScoreConfig& cfg);

/// Fraction of nodes where pi_hat agrees with truth. Throws InputError on
/// length mismatch.
double accuracy(const Permutation& pi_hat, const Permutation& truth);
inline double accuracy(const Matching& m, const Permutation& truth) {
  return accuracy(m.pi_hat, truth);
}

/// Sample Pearson correlation; 0 when either side has zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

}  // namespace tds
