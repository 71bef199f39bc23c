#pragma once

#include <string_view>

#include "tds/features.hpp"
#include "tds/graph.hpp"

namespace tds {

enum class Matcher { hungarian, greedy };

std::string_view to_string(Matcher m);
/// Accepts "hungarian" or "greedy". Throws InputError otherwise.
Matcher parse_matcher(std::string_view text);

struct Matching {
  Permutation pi_hat;  // node of G_a -> node of G_b
  Matcher method = Matcher::hungarian;
  double mean_cost = 0.0;
};

/// Exact minimum-cost assignment (shortest augmenting paths with potentials,
/// O(n^3)). Throws InputError on a non-square matrix or a non-finite entry.
Matching hungarian(const SimilarityMatrix& x);

/// Repeatedly takes the smallest remaining entry and removes its row and
/// column. Ties go to the smallest row index, then the smallest column index.
/// O(n^2 log n) time, one n x n index table of extra memory.
Matching greedy(const SimilarityMatrix& x);

Matching solve(const SimilarityMatrix& x, Matcher method);

/// (1/n) * sum_i x(i, m[i]).
double matching_cost(const SimilarityMatrix& x, const Permutation& m);

}  // namespace tds
