#include "tds/assign.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

#include "tds/error.hpp"

namespace tds {
namespace {

void check_input(const SimilarityMatrix& x, const char* who) {
  if (x.rows() != x.cols()) {
    throw InputError(std::string(who) + ": matrix must be square, got " +
                     std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (double v : x.row(i)) {
      if (!std::isfinite(v)) throw InputError(std::string(who) + ": non-finite entry in row " + std::to_string(i));
    }
  }
}

}  // namespace

std::string_view to_string(Matcher m) {
  return m == Matcher::hungarian ? "hungarian" : "greedy";
}

Matcher parse_matcher(std::string_view text) {
  if (text == "hungarian") return Matcher::hungarian;
  if (text == "greedy") return Matcher::greedy;
  throw InputError("unknown matcher '" + std::string(text) + "' (expected hungarian or greedy)");
}

double matching_cost(const SimilarityMatrix& x, const Permutation& m) {
  if (m.size() != x.rows() || x.rows() != x.cols()) throw InputError("matching_cost: size mismatch");
  if (m.size() == 0) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) total += x(i, m[static_cast<NodeId>(i)]);
  return total / static_cast<double>(m.size());
}

Matching hungarian(const SimilarityMatrix& x) {
  check_input(x, "hungarian");
  const std::size_t n = x.rows();
  constexpr double inf = std::numeric_limits<double>::infinity();

  // 1-based potentials; column 0 is the virtual source. owner[j] is the row
  // currently assigned to column j.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), min_slack(n + 1);
  std::vector<std::size_t> owner(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);

  for (std::size_t row = 1; row <= n; ++row) {
    owner[0] = row;
    std::size_t col = 0;
    std::fill(min_slack.begin(), min_slack.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[col] = 1;
      const std::size_t i0 = owner[col];
      double delta = inf;
      std::size_t next = 0;
      const auto cost_row = x.row(i0 - 1);
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double slack = cost_row[j - 1] - u[i0] - v[j];
        if (slack < min_slack[j]) {
          min_slack[j] = slack;
          way[j] = col;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          next = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      col = next;
    } while (owner[col] != 0);
    do {
      const std::size_t prev = way[col];
      owner[col] = owner[prev];
      col = prev;
    } while (col != 0);
  }

  std::vector<NodeId> map(n);
  for (std::size_t j = 1; j <= n; ++j) map[owner[j] - 1] = static_cast<NodeId>(j - 1);
  Matching m{Permutation(std::move(map)), Matcher::hungarian, 0.0};
  m.mean_cost = matching_cost(x, m.pi_hat);
  return m;
}

Matching greedy(const SimilarityMatrix& x) {
  check_input(x, "greedy");
  const std::size_t n = x.rows();

  // Each row's columns in (value, column) order; the heap holds one live
  // candidate per unassigned row, ordered by (value, row, column). A popped
  // candidate whose column is taken is replaced by the row's next one.
  std::vector<NodeId> order(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto first = order.begin() + static_cast<std::ptrdiff_t>(i * n);
    std::iota(first, first + static_cast<std::ptrdiff_t>(n), NodeId{0});
    const auto row = x.row(i);
    std::sort(first, first + static_cast<std::ptrdiff_t>(n), [&row](NodeId a, NodeId b) {
      return row[a] < row[b] || (row[a] == row[b] && a < b);
    });
  }

  using Candidate = std::tuple<double, NodeId, NodeId>;
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> heap;
  std::vector<std::size_t> cursor(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId j = order[i * n];
    heap.emplace(x(i, j), static_cast<NodeId>(i), j);
  }

  std::vector<char> column_taken(n, 0);
  std::vector<NodeId> map(n);
  std::size_t assigned = 0;
  while (assigned < n) {
    const auto [value, i, j] = heap.top();
    heap.pop();
    if (!column_taken[j]) {
      column_taken[j] = 1;
      map[i] = j;
      ++assigned;
      continue;
    }
    auto& c = cursor[i];
    while (column_taken[order[i * n + c]]) ++c;
    const NodeId next = order[i * n + c];
    heap.emplace(x(i, next), i, next);
  }

  Matching m{Permutation(std::move(map)), Matcher::greedy, 0.0};
  m.mean_cost = matching_cost(x, m.pi_hat);
  return m;
}

Matching solve(const SimilarityMatrix& x, Matcher method) {
  return method == Matcher::hungarian ? hungarian(x) : greedy(x);
}

}  // namespace tds
