#include "tds/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tds/error.hpp"

namespace tds {
namespace {

constexpr std::string_view kNodesDirective = "# nodes:";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line, EdgeFormat format) {
  std::vector<std::string_view> out;
  if (format == EdgeFormat::csv) {
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      out.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos < line.size()) {
    pos = line.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos) break;
    auto end = line.find_first_of(" \t\r", pos);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::optional<double> parse_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::optional<long long> parse_integer(std::string_view s) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::optional<std::size_t> parse_nodes_directive(std::string_view line) {
  if (!line.starts_with(kNodesDirective)) return std::nullopt;
  const auto n = parse_integer(trim(line.substr(kNodesDirective.size())));
  if (!n || *n < 0) return std::nullopt;
  return static_cast<std::size_t>(*n);
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

/// Integer labels first (numerically), then everything else lexicographically.
struct LabelOrder {
  bool operator()(const std::string& a, const std::string& b) const {
    const auto ia = parse_integer(a), ib = parse_integer(b);
    if (ia && ib) return *ia < *ib || (*ia == *ib && a < b);
    if (ia != std::nullopt || ib != std::nullopt) return ia.has_value();
    return a < b;
  }
};

}  // namespace

LabelMap LabelMap::identity(std::size_t n) {
  LabelMap m;
  m.labels_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.intern(std::to_string(i));
  return m;
}

NodeId LabelMap::intern(std::string_view label) {
  std::string key(label);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const auto id = static_cast<NodeId>(labels_.size());
  index_.emplace(key, id);
  labels_.push_back(std::move(key));
  return id;
}

std::optional<NodeId> LabelMap::find(std::string_view label) const {
  if (auto it = index_.find(std::string(label)); it != index_.end()) return it->second;
  return std::nullopt;
}

NodeId LabelMap::at(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw InputError("unknown node label '" + std::string(label) + "'");
}

EdgeFormat parse_edge_format(std::string_view text) {
  if (text == "whitespace") return EdgeFormat::whitespace;
  if (text == "csv") return EdgeFormat::csv;
  throw InputError("unknown edge-list format '" + std::string(text) + "' (expected whitespace or csv)");
}

std::vector<EdgeRecord> parse_edge_records(std::istream& in, EdgeFormat format,
                                           const std::string& source_name) {
  std::vector<EdgeRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = split_fields(body, format);
    if (fields.size() < 2 || fields[0].empty() || fields[1].empty()) {
      throw ParseError(source_name, line_no, "expected two node labels");
    }
    EdgeRecord rec{std::string(fields[0]), std::string(fields[1]), std::nullopt, line_no};
    for (std::size_t k = 2; k < fields.size(); ++k) {
      const auto v = parse_number(fields[k]);
      if (!v) {
        throw ParseError(source_name, line_no,
                         "column " + std::to_string(k + 1) + " is not numeric: '" + std::string(fields[k]) + "'");
      }
      if (k == 2) rec.weight = *v;
    }
    records.push_back(std::move(rec));
  }
  if (in.bad()) throw IoError("read error in '" + source_name + "'");
  return records;
}

std::vector<EdgeRecord> filter_positive(std::span<const EdgeRecord> records) {
  std::vector<EdgeRecord> out;
  for (const auto& r : records) {
    if (!r.weight) {
      throw InputError("filter_positive: line " + std::to_string(r.line) + " has no weight column");
    }
    if (*r.weight > 0.0) out.push_back(r);
  }
  return out;
}

LabeledGraph read_edge_list(std::istream& in, const EdgeListOptions& options,
                            const std::string& source_name) {
  // The node-count directive must precede every data row.
  std::optional<std::size_t> declared;
  std::string text;
  {
    std::string line;
    std::ostringstream rest;
    bool data_seen = false;
    while (std::getline(in, line)) {
      const auto body = trim(line);
      if (!data_seen && !declared) declared = parse_nodes_directive(body);
      if (!body.empty() && body.front() != '#') data_seen = true;
      rest << line << '\n';
    }
    if (in.bad()) throw IoError("read error in '" + source_name + "'");
    text = std::move(rest).str();
  }
  std::istringstream body(text);
  auto records = parse_edge_records(body, options.format, source_name);
  if (options.positive_only) records = filter_positive(records);

  LabeledGraph out;
  if (declared) out.labels = LabelMap::identity(*declared);
  std::vector<Edge> edges;
  edges.reserve(records.size());
  for (const auto& r : records) {
    if (declared && (!out.labels.find(r.source) || !out.labels.find(r.target))) {
      throw ParseError(source_name, r.line, "label outside the declared node range 0.." +
                                                std::to_string(*declared ? *declared - 1 : 0));
    }
    const NodeId u = out.labels.intern(r.source);
    const NodeId v = out.labels.intern(r.target);
    edges.emplace_back(u, v);
  }
  if (out.labels.size() == 0) throw InputError("'" + source_name + "' contains no edges");
  out.graph = build_graph(out.labels.size(), edges);
  return out;
}

LabeledGraph read_edge_list(const std::filesystem::path& path, const EdgeListOptions& options) {
  auto in = open_in(path);
  return read_edge_list(in, options, path.string());
}

void write_edge_list(std::ostream& os, const Graph& g) {
  os << kNodesDirective << ' ' << g.num_nodes() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  auto out = open_out(path);
  write_edge_list(out, g);
  finish(out, path);
}

void write_matching(std::ostream& os, const Permutation& m, const LabelMap& labels_a,
                    const LabelMap& labels_b) {
  if (labels_a.size() != m.size() || labels_b.size() != m.size()) {
    throw InputError("write_matching: label maps do not cover the matching");
  }
  std::vector<std::pair<std::string, std::string>> rows;
  rows.reserve(m.size());
  for (NodeId i = 0; i < m.size(); ++i) rows.emplace_back(labels_a.label(i), labels_b.label(m[i]));
  std::sort(rows.begin(), rows.end(),
            [](const auto& x, const auto& y) { return LabelOrder{}(x.first, y.first); });
  for (const auto& [a, b] : rows) os << a << '\t' << b << '\n';
}

void write_matching(const std::filesystem::path& path, const Permutation& m,
                    const LabelMap& labels_a, const LabelMap& labels_b) {
  std::ostringstream buf;
  write_matching(buf, m, labels_a, labels_b);
  auto out = open_out(path);
  out << buf.str();
  finish(out, path);
}

Permutation read_permutation(std::istream& in, const LabelMap& labels_a, const LabelMap& labels_b,
                             const std::string& source_name) {
  const std::size_t n = labels_a.size();
  if (labels_b.size() != n) throw InputError("read_permutation: label maps differ in size");
  constexpr NodeId unset = static_cast<NodeId>(-1);
  std::vector<NodeId> map(n, unset);
  std::string line;
  std::size_t line_no = 0, rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = split_fields(body, EdgeFormat::whitespace);
    if (fields.size() != 2) throw ParseError(source_name, line_no, "expected 'label_a<TAB>label_b'");
    const auto a = labels_a.find(fields[0]);
    const auto b = labels_b.find(fields[1]);
    if (!a) throw ParseError(source_name, line_no, "unknown source label '" + std::string(fields[0]) + "'");
    if (!b) throw ParseError(source_name, line_no, "unknown target label '" + std::string(fields[1]) + "'");
    if (map[*a] != unset) throw ParseError(source_name, line_no, "source label repeated");
    map[*a] = *b;
    ++rows;
  }
  if (rows != n) {
    throw InputError("'" + source_name + "' maps " + std::to_string(rows) + " of " +
                     std::to_string(n) + " nodes");
  }
  try {
    return Permutation(std::move(map));
  } catch (const InputError&) {
    throw InputError("'" + source_name + "' is not a bijection (a target label repeats)");
  }
}

Permutation read_permutation(const std::filesystem::path& path, const LabelMap& labels_a,
                             const LabelMap& labels_b) {
  auto in = open_in(path);
  return read_permutation(in, labels_a, labels_b, path.string());
}

Permutation read_permutation(const std::filesystem::path& path) {
  std::size_t rows = 0;
  {
    auto in = open_in(path);
    std::string line;
    while (std::getline(in, line)) {
      const auto body = trim(line);
      if (!body.empty() && body.front() != '#') ++rows;
    }
  }
  const auto ids = LabelMap::identity(rows);
  return read_permutation(path, ids, ids);
}

void write_pair(const std::filesystem::path& dir, const GraphPair& pair,
                const CorrelatedErConfig& config) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());

  write_edge_list(dir / "a.edges", pair.a);
  write_edge_list(dir / "b.edges", pair.b);
  const auto ids = LabelMap::identity(pair.truth.size());
  write_matching(dir / "truth.perm", pair.truth, ids, ids);

  nlohmann::ordered_json meta;
  meta["n"] = config.n;
  meta["p_mode"] = std::string(to_string(config.p_mode));
  meta["p"] = config.edge_probability();
  meta["s"] = config.s;
  meta["seed"] = config.seed;
  meta["edges_a"] = pair.a.num_edges();
  meta["edges_b"] = pair.b.num_edges();
  const auto path = dir / "meta.json";
  auto out = open_out(path);
  out << meta.dump(2) << '\n';
  finish(out, path);
}

LoadedPair read_pair(const std::filesystem::path& dir) {
  LoadedPair out;
  out.a = read_edge_list(dir / "a.edges");
  out.b = read_edge_list(dir / "b.edges");
  out.truth = read_permutation(dir / "truth.perm", out.a.labels, out.b.labels);
  return out;
}

}  // namespace tds
