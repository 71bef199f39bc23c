#include "tds/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "tds/error.hpp"
#include "tds/rng.hpp"

namespace tds {
namespace {

std::vector<double> histogram(std::span<const double> samples, const HistogramGrid& grid) {
  const std::size_t bins = grid.bins();
  std::vector<double> h(bins, 0.0);
  for (double x : samples) {
    const double pos = std::floor((x + grid.support_clip) / grid.bin_width);
    const auto idx = static_cast<std::size_t>(std::clamp(pos, 0.0, static_cast<double>(bins - 1)));
    h[idx] += 1.0;
  }
  const double total = static_cast<double>(samples.size());
  for (double& v : h) v /= total;
  return h;
}

bool in_tail(std::size_t bin, const HistogramGrid& grid) {
  const double center = -grid.support_clip + (static_cast<double>(bin) + 0.5) * grid.bin_width;
  return std::abs(center) > grid.threshold;
}

double tv_over(std::span<const double> a, std::span<const double> b, const HistogramGrid& grid,
               bool tail, bool center) {
  if (a.empty() || b.empty()) throw InputError("empirical_tv_region: sample lists must be nonempty");
  grid.validate();
  const auto ha = histogram(a, grid);
  const auto hb = histogram(b, grid);
  double sum = 0.0;
  for (std::size_t k = 0; k < ha.size(); ++k) {
    const bool is_tail = in_tail(k, grid);
    if ((is_tail && tail) || (!is_tail && center)) sum += std::abs(ha[k] - hb[k]);
  }
  return std::min(1.0, 0.5 * sum);
}

}  // namespace

DegreeStats DegreeStats::for_model(std::size_t n, double p, double s) {
  const double ps = p * s;
  const double m = static_cast<double>(n) - 1.0;
  return {m * ps, std::sqrt(m * (1.0 - ps) * ps)};
}

double normalize_degree(double deg, const DegreeStats& stats) {
  if (!(stats.sigma > 0.0)) throw DegenerateParameters("normalize_degree: sigma must be positive");
  return (deg - stats.mu) / stats.sigma;
}

double theoretical_rho(double p, double s) {
  if (!(p >= 0.0 && p <= 1.0 && s >= 0.0 && s <= 1.0)) {
    throw InputError("theoretical_rho: p and s must lie in [0, 1]");
  }
  const double ps = p * s;
  if (ps >= 1.0) throw DegenerateParameters("theoretical_rho: undefined at ps = 1");
  return s * (1.0 - p) / (1.0 - ps);
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InputError("pearson: length mismatch");
  const std::size_t n = x.size();
  if (n == 0) return 0.0;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

RhoEstimate empirical_rho(const CorrelatedErConfig& config, std::size_t trials) {
  if (trials < 30) throw InputError("empirical_rho: need at least 30 trials");
  config.validate();
  const std::size_t n = config.n;
  const auto stats = DegreeStats::for_model(n, config.edge_probability(), config.s);

  std::vector<double> ua, ub_matched, ub_unmatched;
  ua.reserve(n * trials);
  ub_matched.reserve(n * trials);
  ub_unmatched.reserve(n * trials);
  for (std::size_t k = 0; k < trials; ++k) {
    CorrelatedErConfig c = config;
    c.seed = config.seed + k;
    const GraphPair pair = generate_pair(c);
    Rng partner(c.seed, Stream::unmatched_partner);
    for (NodeId i = 0; i < n; ++i) {
      const NodeId mate = pair.truth[i];
      auto other = static_cast<NodeId>(partner.below(n - 1));
      if (other >= mate) ++other;
      ua.push_back(normalize_degree(static_cast<double>(pair.a.degree(i)), stats));
      ub_matched.push_back(normalize_degree(static_cast<double>(pair.b.degree(mate)), stats));
      ub_unmatched.push_back(normalize_degree(static_cast<double>(pair.b.degree(other)), stats));
    }
  }
  return {pearson(ua, ub_matched), pearson(ua, ub_unmatched), ua.size()};
}

std::size_t HistogramGrid::bins() const {
  return static_cast<std::size_t>(std::llround(2.0 * support_clip / bin_width));
}

void HistogramGrid::validate() const {
  if (!(bin_width > 0.0) || !(support_clip > 0.0)) {
    throw InputError("histogram grid needs positive bin width and support");
  }
  if (!(threshold > 0.0)) throw InputError("tail threshold must be positive");
}

double empirical_tv_region(std::span<const double> a, std::span<const double> b, Region region,
                           const HistogramGrid& grid) {
  return tv_over(a, b, grid, region == Region::tail, region == Region::center);
}

double empirical_tv(std::span<const double> a, std::span<const double> b,
                    const HistogramGrid& grid) {
  return tv_over(a, b, grid, true, true);
}

double TailScoreConfig::edge_probability() const {
  return p_mode == PMode::explicit_p ? p : regime_probability(p_mode, n);
}

void TailScoreConfig::validate() const {
  if (n < 2) throw InputError("tail scores: n must be at least 2");
  if (samples_per_instance < 2) throw InputError("tail scores: need at least 2 samples per instance");
  if (instances == 0) throw InputError("tail scores: need at least one instance");
  if (s_grid.empty()) throw InputError("tail scores: empty s grid");
  grid.validate();
}

TailScoreReport tail_center_scores(const TailScoreConfig& cfg) {
  cfg.validate();
  const double p = cfg.edge_probability();
  const std::size_t m = cfg.samples_per_instance;

  TailScoreReport report;
  std::vector<double> ua(m), ub_matched(m), ub_unmatched(m);
  for (std::size_t k = 0; k < cfg.s_grid.size(); ++k) {
    TailScoreRow row;
    row.s = cfg.s_grid[k];
    row.rho = theoretical_rho(p, row.s);
    const double noise = std::sqrt(std::max(0.0, 1.0 - row.rho * row.rho));
    row.min_delta = std::numeric_limits<double>::infinity();
    row.max_delta = -std::numeric_limits<double>::infinity();

    double sum_tail = 0.0, sum_center = 0.0;
    double sum_dtm = 0.0, sum_dtu = 0.0, sum_dcm = 0.0, sum_dcu = 0.0;
    std::size_t kept = 0;
    for (std::size_t inst = 0; inst < cfg.instances; ++inst) {
      Rng rng(cfg.seed, Stream::tail_samples, k * cfg.instances + inst);
      std::normal_distribution<double> normal;
      for (std::size_t q = 0; q < m; ++q) {
        ua[q] = normal(rng.engine());
        ub_matched[q] = row.rho * ua[q] + noise * normal(rng.engine());
        ub_unmatched[q] = normal(rng.engine());
      }
      const double dtm = empirical_tv_region(ua, ub_matched, Region::tail, cfg.grid);
      const double dtu = empirical_tv_region(ua, ub_unmatched, Region::tail, cfg.grid);
      const double dcm = empirical_tv_region(ua, ub_matched, Region::center, cfg.grid);
      const double dcu = empirical_tv_region(ua, ub_unmatched, Region::center, cfg.grid);
      row.min_delta = std::min({row.min_delta, dtm, dtu, dcm, dcu});
      row.max_delta = std::max({row.max_delta, dtm, dtu, dcm, dcu});
      if (dtu < kScoreDenominatorFloor || dcu < kScoreDenominatorFloor) {
        ++row.dropped_instances;
        continue;
      }
      ++kept;
      sum_tail += dtm / dtu;
      sum_center += dcm / dcu;
      sum_dtm += dtm;
      sum_dtu += dtu;
      sum_dcm += dcm;
      sum_dcu += dcu;
    }
    if (kept > 0) {
      const double kk = static_cast<double>(kept);
      row.mean_s_tail = sum_tail / kk;
      row.mean_s_center = sum_center / kk;
      row.delta_tail_matched = sum_dtm / kk;
      row.delta_tail_unmatched = sum_dtu / kk;
      row.delta_center_matched = sum_dcm / kk;
      row.delta_center_unmatched = sum_dcu / kk;
    }
    report.rows.push_back(row);
  }
  return report;
}

double TailScoreReport::tail_to_center_ratio() const {
  double tail = 0.0, center = 0.0;
  for (const auto& r : rows) {
    tail += r.mean_s_tail;
    center += r.mean_s_center;
  }
  return center > 0.0 ? tail / center : std::numeric_limits<double>::quiet_NaN();
}

double accuracy(const Permutation& pi_hat, const Permutation& truth) {
  if (pi_hat.size() != truth.size()) throw InputError("accuracy: length mismatch");
  if (truth.size() == 0) return 0.0;
  std::size_t hits = 0;
  for (NodeId i = 0; i < truth.size(); ++i) hits += pi_hat[i] == truth[i];
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

}  // namespace tds
