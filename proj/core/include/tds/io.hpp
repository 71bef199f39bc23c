#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tds/assign.hpp"
#include "tds/graph.hpp"
#include "tds/synth.hpp"

namespace tds {

/// Bijection between external node labels and dense NodeIds, assigned in
/// first-appearance order.
class LabelMap {
 public:
  /// Labels "0", "1", ..., "n-1" mapped to themselves.
  static LabelMap identity(std::size_t n);

  /// Returns the id of `label`, assigning the next free id if unseen.
  NodeId intern(std::string_view label);
  std::optional<NodeId> find(std::string_view label) const;
  /// Throws InputError for an unknown label.
  NodeId at(std::string_view label) const;
  const std::string& label(NodeId id) const { return labels_.at(id); }
  std::size_t size() const noexcept { return labels_.size(); }

  friend bool operator==(const LabelMap& a, const LabelMap& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
};

enum class EdgeFormat { whitespace, csv };

/// "whitespace" or "csv". Throws InputError otherwise.
EdgeFormat parse_edge_format(std::string_view text);

struct EdgeRecord {
  std::string source;
  std::string target;
  std::optional<double> weight;  // third column, when present
  std::size_t line = 0;
};

/// Parses edge rows. Blank lines and lines starting with '#' are skipped;
/// every other row needs two labels followed by optional numeric columns.
/// Throws ParseError (with line number) on a malformed row.
std::vector<EdgeRecord> parse_edge_records(std::istream& in, EdgeFormat format,
                                           const std::string& source_name = "<stream>");

/// Keeps records with weight > 0. Throws InputError if any record lacks a
/// weight column.
std::vector<EdgeRecord> filter_positive(std::span<const EdgeRecord> records);

struct LabeledGraph {
  Graph graph;
  LabelMap labels;
};

struct EdgeListOptions {
  EdgeFormat format = EdgeFormat::whitespace;
  bool positive_only = false;
};

/// Reads an edge list as an undirected simple graph (directed rows are
/// symmetrized, duplicates and self-loops dropped). A leading
/// "# nodes: N" comment declares ids 0..N-1 up front, so isolated nodes
/// survive a round trip; labels outside that range are then rejected.
/// Throws IoError if unreadable, ParseError on a bad row, InputError when the
/// file holds no edges and declares no nodes.
LabeledGraph read_edge_list(const std::filesystem::path& path, const EdgeListOptions& options = {});
LabeledGraph read_edge_list(std::istream& in, const EdgeListOptions& options = {},
                            const std::string& source_name = "<stream>");

/// Writes "# nodes: N" then one "i j" row per edge (i < j, lexicographic).
void write_edge_list(std::ostream& os, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

/// Two tab-separated columns "label_a<TAB>label_b", one row per node of G_a,
/// sorted by label_a (integer labels numerically, before any other labels,
/// which sort lexicographically).
void write_matching(std::ostream& os, const Permutation& m, const LabelMap& labels_a,
                    const LabelMap& labels_b);
void write_matching(const std::filesystem::path& path, const Permutation& m,
                    const LabelMap& labels_a, const LabelMap& labels_b);

/// Inverse of write_matching. Throws InputError on an unknown label, a
/// repeated label on either side, or a file that does not cover every node.
Permutation read_permutation(std::istream& in, const LabelMap& labels_a, const LabelMap& labels_b,
                             const std::string& source_name = "<stream>");
Permutation read_permutation(const std::filesystem::path& path, const LabelMap& labels_a,
                             const LabelMap& labels_b);
/// Labels are taken to be the internal ids 0..n-1, n = number of rows.
Permutation read_permutation(const std::filesystem::path& path);

/// Writes a.edges, b.edges, truth.perm and meta.json into `dir` (created if
/// missing). Output is a pure function of the arguments.
void write_pair(const std::filesystem::path& dir, const GraphPair& pair,
                const CorrelatedErConfig& config);

struct LoadedPair {
  LabeledGraph a;
  LabeledGraph b;
  Permutation truth;
};

LoadedPair read_pair(const std::filesystem::path& dir);

}  // namespace tds
