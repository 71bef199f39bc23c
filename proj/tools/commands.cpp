#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tds/error.hpp"
#include "tds/pipeline.hpp"

namespace tds::cli {
namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

/// CSV to `path`, or to `out` when no path was given.
void emit(const std::optional<std::filesystem::path>& path, std::ostream& out, const std::string& csv) {
  if (path) {
    write_file(*path, csv);
  } else {
    out << csv;
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

std::string fmt_ms(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << v;
  return os.str();
}

}  // namespace

void cmd_generate(const GenerateOptions& opts) {
  opts.config.validate();
  write_pair(opts.out_dir, generate_pair(opts.config), opts.config);
}

MatchSummary cmd_match(const MatchOptions& opts) {
  const auto a = read_edge_list(opts.a_path, opts.input);
  const auto b = read_edge_list(opts.b_path, opts.input);
  const auto prepared = prepare_alignment(a.graph, b.graph, opts.features);
  const Matcher method = opts.matcher.value_or(default_matcher(a.graph.num_nodes()));
  const auto result = align(prepared, method);

  MatchSummary summary{a.graph.num_nodes(), method, result.matching.mean_cost,
                       result.t_feature_ms, result.t_matrix_ms, result.t_assign_ms,
                       prepared.degenerate(), std::nullopt};
  if (opts.truth) {
    const auto truth = read_permutation(*opts.truth, a.labels, b.labels);
    summary.accuracy = accuracy(result.matching, truth);
  }

  std::ostringstream matching;
  write_matching(matching, result.matching.pi_hat, a.labels, b.labels);
  if (opts.features_out) {
    std::filesystem::create_directories(*opts.features_out);
    std::ostringstream fa, fb;
    write_features_csv(fa, prepared.features_a);
    write_features_csv(fb, prepared.features_b);
    write_file(*opts.features_out / "features_a.csv", fa.str());
    write_file(*opts.features_out / "features_b.csv", fb.str());
  }
  write_file(opts.out, matching.str());
  return summary;
}

void print_summary(std::ostream& os, const MatchSummary& s) {
  os << "n=" << s.n << " matcher=" << to_string(s.matcher) << " mean_cost=" << fmt(s.mean_cost)
     << " t_feature_ms=" << fmt_ms(s.t_feature_ms) << " t_matrix_ms=" << fmt_ms(s.t_matrix_ms)
     << " t_assign_ms=" << fmt_ms(s.t_assign_ms);
  if (s.accuracy) os << " accuracy=" << fmt(*s.accuracy);
  if (s.degenerate) os << " degenerate=1";
  os << '\n';
}

EvalRow cmd_eval(const EvalOptions& opts) {
  const auto a = read_edge_list(opts.a_path, opts.input);
  const auto b = read_edge_list(opts.b_path, opts.input);
  if (a.graph.num_nodes() != b.graph.num_nodes()) {
    throw InputError("graphs differ in size: " + std::to_string(a.graph.num_nodes()) + " vs " +
                     std::to_string(b.graph.num_nodes()) + " nodes");
  }
  const auto pi_hat = read_permutation(opts.matching, a.labels, b.labels);
  const auto truth = read_permutation(opts.truth, a.labels, b.labels);
  const auto prepared = prepare_alignment(a.graph, b.graph, opts.features);
  return {accuracy(pi_hat, truth), edge_disagreement(a.graph, b.graph, pi_hat),
          matching_cost(prepared.distances, pi_hat)};
}

void write_eval_csv(std::ostream& os, const EvalRow& row, bool header) {
  if (header) os << "accuracy,edge_disagreement,mean_cost\n";
  os << fmt(row.accuracy) << ',' << row.edge_disagreement << ',' << fmt(row.mean_cost) << '\n';
}

std::vector<BenchRow> run_bench(const BenchOptions& opts) {
  if (opts.s_grid.empty()) throw InputError("bench: empty s grid");
  if (opts.replicates == 0) throw InputError("bench: replicates must be positive");
  if (opts.matchers.empty()) throw InputError("bench: no matcher selected");
  opts.features.validate();

  std::optional<LabeledGraph> real;
  if (opts.input) real = read_edge_list(*opts.input, opts.input_options);

  std::vector<BenchRow> rows;
  for (double s : opts.s_grid) {
    for (std::size_t k = 0; k < opts.replicates; ++k) {
      const std::uint64_t seed = replicate_seed(opts.seed, k);
      GraphPair pair;
      BenchRow base;
      base.s = s;
      base.seed = seed;
      if (real) {
        pair = perturb_real(real->graph, s, seed);
        const double n = static_cast<double>(real->graph.num_nodes());
        base.n = real->graph.num_nodes();
        base.p_mode = "real";
        base.p = n > 1 ? 2.0 * static_cast<double>(real->graph.num_edges()) / (n * (n - 1)) : 0.0;
      } else {
        CorrelatedErConfig config{opts.n, opts.p, s, seed, opts.p_mode};
        pair = generate_pair(config);
        base.n = opts.n;
        base.p_mode = std::string(to_string(opts.p_mode));
        base.p = config.edge_probability();
      }
      const auto prepared = prepare_alignment(pair.a, pair.b, opts.features);
      for (Matcher m : opts.matchers) {
        const auto result = align(prepared, m);
        BenchRow row = base;
        row.matcher = m;
        row.accuracy = accuracy(result.matching, pair.truth);
        row.mean_cost = result.matching.mean_cost;
        if (opts.timings) {
          row.t_feature_ms = result.t_feature_ms;
          row.t_matrix_ms = result.t_matrix_ms;
          row.t_assign_ms = result.t_assign_ms;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows, bool timings) {
  os << "n,p_mode,p,s,seed,matcher,accuracy,mean_cost,t_feature_ms,t_matrix_ms,t_assign_ms\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.p_mode << ',' << fmt(r.p) << ',' << fmt(r.s) << ',' << r.seed << ','
       << to_string(r.matcher) << ',' << fmt(r.accuracy) << ',' << fmt(r.mean_cost) << ','
       << fmt_ms(timings ? r.t_feature_ms : 0.0) << ',' << fmt_ms(timings ? r.t_matrix_ms : 0.0)
       << ',' << fmt_ms(timings ? r.t_assign_ms : 0.0) << '\n';
  }
}

void write_tailscore_csv(std::ostream& os, const TailScoreReport& report, bool with_deltas) {
  os << "s,mean_s_tail,mean_s_center,dropped_instances";
  if (with_deltas) {
    os << ",delta_tail_matched,delta_tail_unmatched,delta_center_matched,delta_center_unmatched";
  }
  os << '\n';
  for (const auto& r : report.rows) {
    os << fmt(r.s) << ',' << fmt(r.mean_s_tail) << ',' << fmt(r.mean_s_center) << ','
       << r.dropped_instances;
    if (with_deltas) {
      os << ',' << fmt(r.delta_tail_matched) << ',' << fmt(r.delta_tail_unmatched) << ','
         << fmt(r.delta_center_matched) << ',' << fmt(r.delta_center_unmatched);
    }
    os << '\n';
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seedless graph matching with tail degree signatures"};
  app.require_subcommand(1);

  // Shared flag storage; each subcommand registers the subset it uses.
  std::size_t n = 1000;
  double p = 0.0;
  std::string p_mode = "logn";
  double s = 1.0;
  std::vector<double> s_grid;
  std::uint64_t seed = 0;
  unsigned theta = 10, lambda = 2;
  std::string matcher;
  std::size_t replicates = 1;
  std::string out_path;
  std::string format = "whitespace";
  bool positive_only = false;
  std::string a_path, b_path, truth_path, matching_path, input_path, features_out;
  bool no_timings = false;
  std::size_t samples = 100, instances = 100;
  bool with_deltas = false;

  const auto add_features = [&](CLI::App* sub) {
    sub->add_option("--theta", theta, "Smallest/largest degrees kept per layer")->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--lambda", lambda, "Deepest distance layer")->capture_default_str()
        ->check(CLI::PositiveNumber);
  };
  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Edge-list format")->check(CLI::IsMember({"whitespace", "csv"}))
        ->capture_default_str();
    sub->add_flag("--positive-only", positive_only, "Keep only rows whose third column is > 0");
  };
  const auto add_model = [&](CLI::App* sub) {
    sub->add_option("--n", n, "Node count")->capture_default_str()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 31));
    sub->add_option("--p", p, "Edge probability (with --p-mode explicit)")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--p-mode", p_mode, "Edge probability regime")
        ->check(CLI::IsMember({"explicit", "logn", "log2n"}))->capture_default_str();
    sub->add_option("--seed", seed, "Master RNG seed")->capture_default_str();
  };

  auto* gen = app.add_subcommand("generate", "Write a correlated Erdős–Rényi pair to a directory");
  add_model(gen);
  gen->add_option("--s", s, "Edge sampling probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  gen->add_option("--out", out_path, "Output directory")->required();

  auto* match = app.add_subcommand("match", "Align two edge lists");
  match->add_option("--a", a_path, "Edge list of G_a")->required()->check(CLI::ExistingFile);
  match->add_option("--b", b_path, "Edge list of G_b")->required()->check(CLI::ExistingFile);
  match->add_option("--out", out_path, "Matching output (label_a<TAB>label_b)")->required();
  match->add_option("--matcher", matcher, "hungarian or greedy (default: by size)")
      ->check(CLI::IsMember({"hungarian", "greedy"}));
  match->add_option("--truth", truth_path, "Ground-truth permutation; reports accuracy")->check(CLI::ExistingFile);
  match->add_option("--features-out", features_out, "Directory for features_a.csv and features_b.csv");
  add_features(match);
  add_input(match);

  auto* eval = app.add_subcommand("eval", "Score a matching against ground truth");
  eval->add_option("--matching", matching_path, "Matching file")->required()->check(CLI::ExistingFile);
  eval->add_option("--truth", truth_path, "Ground-truth permutation")->required()->check(CLI::ExistingFile);
  eval->add_option("--a", a_path, "Edge list of G_a")->required()->check(CLI::ExistingFile);
  eval->add_option("--b", b_path, "Edge list of G_b")->required()->check(CLI::ExistingFile);
  eval->add_option("--out", out_path, "CSV output (default stdout)");
  add_features(eval);
  add_input(eval);

  auto* bench = app.add_subcommand("bench", "Accuracy and runtime sweep over s");
  add_model(bench);
  bench->add_option("--s-grid", s_grid, "Comma-separated s values")->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  bench->add_option("--s", s, "Single s value (when --s-grid is absent)")->check(CLI::Range(0.0, 1.0));
  bench->add_option("--replicates", replicates, "Replicates per s")->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--matcher", matcher, "Run only this matcher")->check(CLI::IsMember({"hungarian", "greedy"}));
  bench->add_option("--input", input_path, "Real network edge list (perturbed instead of generated)")
      ->check(CLI::ExistingFile);
  bench->add_option("--out", out_path, "CSV output (default stdout)");
  bench->add_flag("--no-timings", no_timings, "Write 0 in timing columns (byte-reproducible CSV)");
  add_features(bench);
  add_input(bench);

  auto* tail = app.add_subcommand("tailscore", "Tail vs center total-variation scores");
  add_model(tail);
  tail->add_option("--s-grid", s_grid, "Comma-separated s values")->delimiter(',')->check(CLI::Range(0.0, 1.0));
  tail->add_option("--samples", samples, "Samples per instance")->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 30));
  tail->add_option("--instances", instances, "Instances per s")->capture_default_str()->check(CLI::PositiveNumber);
  tail->add_option("--out", out_path, "CSV output (default stdout)");
  tail->add_flag("--with-deltas", with_deltas, "Append mean total-variation distance columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const std::optional<std::filesystem::path> csv_out =
      out_path.empty() ? std::nullopt : std::optional<std::filesystem::path>(out_path);
  const EdgeListOptions input{parse_edge_format(format), positive_only};
  const FeatureConfig features{theta, lambda, 0};

  try {
    if (gen->parsed()) {
      if (p_mode == "explicit" && gen->count("--p") == 0) throw InputError("--p-mode explicit requires --p");
      cmd_generate({{n, p, s, seed, parse_p_mode(p_mode)}, out_path});
    } else if (match->parsed()) {
      MatchOptions opts{a_path, b_path, input, features, std::nullopt, out_path, std::nullopt, std::nullopt};
      if (!matcher.empty()) opts.matcher = parse_matcher(matcher);
      if (!truth_path.empty()) opts.truth = truth_path;
      if (!features_out.empty()) opts.features_out = features_out;
      print_summary(out, cmd_match(opts));
    } else if (eval->parsed()) {
      const auto row = cmd_eval({matching_path, truth_path, a_path, b_path, input, features});
      std::ostringstream csv;
      write_eval_csv(csv, row);
      emit(csv_out, out, csv.str());
    } else if (bench->parsed()) {
      if (p_mode == "explicit" && bench->count("--p") == 0 && input_path.empty()) {
        throw InputError("--p-mode explicit requires --p");
      }
      BenchOptions opts;
      opts.n = n;
      opts.p_mode = parse_p_mode(p_mode);
      opts.p = p;
      if (!s_grid.empty()) {
        opts.s_grid = s_grid;
      } else if (bench->count("--s")) {
        opts.s_grid = {s};
      }
      opts.replicates = replicates;
      opts.seed = seed;
      opts.features = features;
      if (!matcher.empty()) opts.matchers = {parse_matcher(matcher)};
      if (!input_path.empty()) opts.input = input_path;
      opts.input_options = input;
      opts.timings = !no_timings;
      std::ostringstream csv;
      write_bench_csv(csv, run_bench(opts), opts.timings);
      emit(csv_out, out, csv.str());
    } else if (tail->parsed()) {
      if (p_mode == "explicit" && tail->count("--p") == 0) throw InputError("--p-mode explicit requires --p");
      TailScoreConfig cfg;
      cfg.n = n;
      cfg.p = p;
      cfg.p_mode = parse_p_mode(p_mode);
      if (!s_grid.empty()) cfg.s_grid = s_grid;
      cfg.samples_per_instance = samples;
      cfg.instances = instances;
      cfg.seed = seed;
      std::ostringstream csv;
      write_tailscore_csv(csv, tail_center_scores(cfg), with_deltas);
      emit(csv_out, out, csv.str());
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace tds::cli
