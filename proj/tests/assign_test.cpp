#include "tds/assign.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "tds/error.hpp"

namespace tds {
namespace {

SimilarityMatrix from_rows(const std::vector<std::vector<double>>& rows) {
  SimilarityMatrix x(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) x(i, j) = rows[i][j];
  }
  return x;
}

std::vector<std::vector<double>> random_rows(std::size_t n, std::mt19937_64& rng, bool integral) {
  std::uniform_real_distribution<double> real(0.0, 10.0);
  std::uniform_int_distribution<int> small(0, 4);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (auto& r : rows) {
    for (double& v : r) v = integral ? small(rng) : real(rng);
  }
  return rows;
}

double total(const SimilarityMatrix& x, const Permutation& m) {
  double t = 0.0;
  for (NodeId i = 0; i < m.size(); ++i) t += x(i, m[i]);
  return t;
}

TEST(Hungarian, ZeroDiagonalGivesIdentity) {
  std::mt19937_64 rng(1);
  auto rows = random_rows(12, rng, false);
  for (std::size_t i = 0; i < 12; ++i) rows[i][i] = 0.0;
  const Matching m = hungarian(from_rows(rows));
  EXPECT_EQ(m.pi_hat, Permutation::identity(12));
  EXPECT_EQ(m.mean_cost, 0.0);
  EXPECT_EQ(m.method, Matcher::hungarian);
}

TEST(Hungarian, WorkedTwoByTwo) {
  // Rows: nodes 5 and 18 of G_a. Columns: nodes 9 and 12 of G_b.
  const Matching m = hungarian(from_rows({{2.45, 0.0}, {1.0, 1.73}}));
  EXPECT_EQ(m.pi_hat[0], 1u);
  EXPECT_EQ(m.pi_hat[1], 0u);
  EXPECT_NEAR(m.mean_cost, 0.5, 1e-12);
}

TEST(Hungarian, MatchesBruteForce) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
    const auto rows = random_rows(n, rng, trial % 2 == 0);
    const SimilarityMatrix x = from_rows(rows);
    const Matching m = hungarian(x);
    EXPECT_NEAR(total(x, m.pi_hat), oracle::brute_force_assignment(rows), 1e-9) << "n=" << n;
    EXPECT_NEAR(m.mean_cost, total(x, m.pi_hat) / static_cast<double>(n), 1e-12);
  }
}

TEST(Hungarian, CostInvariantUnderRowAndColumnShifts) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 7;
    auto rows = random_rows(n, rng, false);
    const double base = oracle::brute_force_assignment(rows);
    std::uniform_real_distribution<double> shift(0.0, 3.0);
    double added = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = shift(rng);
      added += r;
      for (double& v : rows[i]) v += r;
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double c = shift(rng);
      added += c;
      for (auto& row : rows) row[j] += c;
    }
    const SimilarityMatrix x = from_rows(rows);
    EXPECT_NEAR(total(x, hungarian(x).pi_hat), base + added, 1e-9);
  }
}

TEST(Greedy, TakesSmallestEntryFirst) {
  const SimilarityMatrix x = from_rows({{0.0, 1.0}, {0.0, 10.0}});
  const Matching g = greedy(x);
  EXPECT_EQ(g.pi_hat, Permutation::identity(2));
  EXPECT_DOUBLE_EQ(total(x, g.pi_hat), 10.0);
  EXPECT_DOUBLE_EQ(total(x, hungarian(x).pi_hat), 1.0);
  EXPECT_EQ(g.method, Matcher::greedy);
}

TEST(Greedy, TiesGoToSmallestRowThenColumn) {
  const Matching g = greedy(from_rows({{1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}}));
  EXPECT_EQ(g.pi_hat, Permutation::identity(3));
  const Matching h = greedy(from_rows({{5.0, 2.0, 2.0}, {2.0, 5.0, 5.0}, {5.0, 5.0, 2.0}}));
  // (0,1), (0,2), (1,0), (2,2) all hold 2: row 0 takes column 1 first.
  EXPECT_EQ(h.pi_hat[0], 1u);
  EXPECT_EQ(h.pi_hat[1], 0u);
  EXPECT_EQ(h.pi_hat[2], 2u);
}

TEST(Greedy, BoundedByHungarianAndWorstCase) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 30);
    const SimilarityMatrix x = from_rows(random_rows(n, rng, trial % 3 == 0));
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (double v : x.row(i)) worst = std::max(worst, v);
    }
    const double h = total(x, hungarian(x).pi_hat);
    const double g = total(x, greedy(x).pi_hat);
    EXPECT_LE(h, g + 1e-9);
    EXPECT_LE(g, static_cast<double>(n) * worst + 1e-9);
  }
}

TEST(Greedy, MatchesDirectSimulation) {
  // Direct O(n^3) simulation of "take the smallest remaining entry".
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 20);
    const auto rows = random_rows(n, rng, true);
    std::vector<bool> row_used(n), col_used(n);
    std::vector<NodeId> expected(n);
    for (std::size_t step = 0; step < n; ++step) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t bi = 0, bj = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (row_used[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (!col_used[j] && rows[i][j] < best) {
            best = rows[i][j];
            bi = i;
            bj = j;
          }
        }
      }
      row_used[bi] = col_used[bj] = true;
      expected[bi] = static_cast<NodeId>(bj);
    }
    EXPECT_EQ(greedy(from_rows(rows)).pi_hat, Permutation(expected));
  }
}

TEST(Solvers, Deterministic) {
  std::mt19937_64 rng(19);
  const SimilarityMatrix x = from_rows(random_rows(40, rng, true));
  EXPECT_EQ(hungarian(x).pi_hat, hungarian(x).pi_hat);
  EXPECT_EQ(greedy(x).pi_hat, greedy(x).pi_hat);
  EXPECT_EQ(solve(x, Matcher::greedy).pi_hat, greedy(x).pi_hat);
}

TEST(Solvers, RejectBadInput) {
  const SimilarityMatrix rect(2, 3);
  EXPECT_THROW(hungarian(rect), InputError);
  EXPECT_THROW(greedy(rect), InputError);
  SimilarityMatrix nan(2, 2);
  nan(1, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(hungarian(nan), InputError);
  SimilarityMatrix inf(2, 2);
  inf(0, 1) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(greedy(inf), InputError);
}

TEST(Solvers, EmptyMatrix) {
  const SimilarityMatrix x(0, 0);
  EXPECT_EQ(hungarian(x).pi_hat.size(), 0u);
  EXPECT_EQ(greedy(x).mean_cost, 0.0);
}

TEST(Matcher, ParseRoundTrip) {
  EXPECT_EQ(parse_matcher("hungarian"), Matcher::hungarian);
  EXPECT_EQ(parse_matcher(to_string(Matcher::greedy)), Matcher::greedy);
  EXPECT_THROW(parse_matcher("auction"), InputError);
}

}  // namespace
}  // namespace tds
