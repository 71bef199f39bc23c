#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tds/analysis.hpp"
#include "tds/assign.hpp"
#include "tds/features.hpp"
#include "tds/io.hpp"
#include "tds/synth.hpp"

namespace tds::cli {

struct GenerateOptions {
  CorrelatedErConfig config;
  std::filesystem::path out_dir;
};

void cmd_generate(const GenerateOptions& opts);

struct MatchOptions {
  std::filesystem::path a_path;
  std::filesystem::path b_path;
  EdgeListOptions input;
  FeatureConfig features;
  std::optional<Matcher> matcher;  // default_matcher(n) when unset
  std::filesystem::path out;
  std::optional<std::filesystem::path> truth;
  std::optional<std::filesystem::path> features_out;  // directory for features_{a,b}.csv
};

struct MatchSummary {
  std::size_t n = 0;
  Matcher matcher = Matcher::hungarian;
  double mean_cost = 0.0;
  double t_feature_ms = 0.0;
  double t_matrix_ms = 0.0;
  double t_assign_ms = 0.0;
  bool degenerate = false;
  std::optional<double> accuracy;
};

MatchSummary cmd_match(const MatchOptions& opts);
void print_summary(std::ostream& os, const MatchSummary& s);

struct EvalOptions {
  std::filesystem::path matching;
  std::filesystem::path truth;
  std::filesystem::path a_path;
  std::filesystem::path b_path;
  EdgeListOptions input;
  FeatureConfig features;
};

struct EvalRow {
  double accuracy = 0.0;
  std::size_t edge_disagreement = 0;
  double mean_cost = 0.0;
};

EvalRow cmd_eval(const EvalOptions& opts);
void write_eval_csv(std::ostream& os, const EvalRow& row, bool header = true);

struct BenchOptions {
  std::size_t n = 1000;
  PMode p_mode = PMode::log_n;
  double p = 0.0;
  std::vector<double> s_grid{1.0, 0.98, 0.95, 0.9};
  std::size_t replicates = 1;
  std::uint64_t seed = 0;
  FeatureConfig features;
  std::vector<Matcher> matchers{Matcher::hungarian, Matcher::greedy};
  std::optional<std::filesystem::path> input;  // real network instead of G(n, p)
  EdgeListOptions input_options;
  bool timings = true;  // false writes 0 in the t_*_ms columns
};

struct BenchRow {
  std::size_t n = 0;
  std::string p_mode;
  double p = 0.0;
  double s = 0.0;
  std::uint64_t seed = 0;
  Matcher matcher = Matcher::hungarian;
  double accuracy = 0.0;
  double mean_cost = 0.0;
  double t_feature_ms = 0.0;
  double t_matrix_ms = 0.0;
  double t_assign_ms = 0.0;
};

/// Seed of replicate k: master seed + k, shared across the s grid.
inline std::uint64_t replicate_seed(std::uint64_t master, std::size_t k) { return master + k; }

/// Rows in (s, replicate, matcher) order.
std::vector<BenchRow> run_bench(const BenchOptions& opts);
void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows, bool timings = true);

struct TailScoreOptions {
  TailScoreConfig config;
  bool with_deltas = false;
};

void write_tailscore_csv(std::ostream& os, const TailScoreReport& report, bool with_deltas = false);

/// Full command line entry point. Returns the process exit status; output
/// files and CSV on `out` are only written once the command has succeeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tds::cli
