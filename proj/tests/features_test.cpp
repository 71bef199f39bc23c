#include "tds/features.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "tds/error.hpp"
#include "tds/synth.hpp"
#include "toy_pair.hpp"

namespace tds {
namespace {

using Ints = std::vector<Feature>;

std::vector<std::uint32_t> sorted(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

FeatureConfig toy_cfg() { return {1, 2, 0}; }

FeatureMatrix single_row(const Ints& values) {
  FeatureMatrix m(1, values.size());
  std::copy(values.begin(), values.end(), m.row(0).begin());
  return m;
}

TEST(LayerDegrees, ToyNode18) {
  const Graph g = toy::graph_a();
  EXPECT_EQ(sorted(layer_degrees(g, 18, 1)), (std::vector<std::uint32_t>{1, 1, 2, 2, 2}));
  EXPECT_EQ(sorted(layer_degrees(g, 18, 2)), (std::vector<std::uint32_t>{2, 4}));
}

TEST(LayerDegrees, IsolatedNodeIsEmpty) {
  const Graph g = build_graph(3, {});
  EXPECT_TRUE(layer_degrees(g, 1, 1).empty());
  EXPECT_TRUE(layer_degrees(g, 1, 2).empty());
}

TEST(TailSelect, WorkedExamples) {
  const std::vector<std::uint32_t> layer1{2, 1, 1, 2, 2};
  const std::vector<std::uint32_t> layer2{4, 2};
  EXPECT_EQ(tail_select(layer1, 1, 0), (Ints{1, 2}));
  EXPECT_EQ(tail_select(layer2, 1, 0), (Ints{2, 4}));
}

TEST(TailSelect, ShortLayersArePadded) {
  EXPECT_EQ(tail_select({}, 2, 0), (Ints{0, 0, 0, 0}));
  const std::vector<std::uint32_t> one{5};
  EXPECT_EQ(tail_select(one, 2, 0), (Ints{5, 0, 5, 0}));
  const std::vector<std::uint32_t> three{9, 3, 6};
  EXPECT_EQ(tail_select(three, 2, -1), (Ints{3, 6, 6, 9}));
  EXPECT_EQ(tail_select(three, 4, -1), (Ints{3, 6, 9, -1, 3, 6, 9, -1}));
}

TEST(TailSelect, LongLayerKeepsBothTails) {
  const std::vector<std::uint32_t> d{7, 1, 9, 3, 3, 8, 2, 6};
  EXPECT_EQ(tail_select(d, 3, 0), (Ints{1, 2, 3, 7, 8, 9}));
}

TEST(TailSelect, RejectsZeroTheta) {
  EXPECT_THROW(tail_select({}, 0, 0), InputError);
}

TEST(ExtractFeature, ToySignatures) {
  const Graph a = toy::graph_a();
  const Graph b = toy::graph_b();
  EXPECT_EQ(extract_feature(a, 18, toy_cfg()), (Ints{1, 2, 2, 4}));
  EXPECT_EQ(extract_feature(b, 9, toy_cfg()), (Ints{1, 2, 3, 4}));
  EXPECT_EQ(extract_feature(a, 5, toy_cfg()), (Ints{1, 3, 1, 3}));
  EXPECT_EQ(extract_feature(b, 12, toy_cfg()), (Ints{1, 3, 1, 3}));
}

TEST(ExtractFeature, RejectsBadConfig) {
  const Graph g = toy::graph_a();
  EXPECT_THROW(extract_feature(g, 0, {0, 2, 0}), InputError);
  EXPECT_THROW(extract_feature(g, 0, {1, 0, 0}), InputError);
  EXPECT_THROW(extract_feature(g, 99, toy_cfg()), InputError);
}

TEST(ExtractAll, EmptyGraphIsAllPad) {
  const FeatureMatrix f = extract_all(build_graph(6, {}), {1, 1, 0});
  ASSERT_EQ(f.rows(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(Ints(f.row(i).begin(), f.row(i).end()), (Ints{0, 0}));
}

TEST(ExtractAll, FourCycle) {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  const FeatureMatrix f = extract_all(build_graph(4, e), {1, 2, 0});
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(Ints(f.row(i).begin(), f.row(i).end()), (Ints{2, 2, 2, 2}));
}

TEST(ExtractAll, AgreesWithSingleNodeCallsForAnyThreadCount) {
  const Graph g = generate_parent(200, 0.05, 31);
  const FeatureConfig cfg{3, 2, 0};
  const FeatureMatrix f1 = extract_all(g, cfg, 1);
  for (NodeId i = 0; i < 200; ++i) {
    EXPECT_EQ(Ints(f1.row(i).begin(), f1.row(i).end()), extract_feature(g, i, cfg)) << "node " << i;
  }
  EXPECT_EQ(extract_all(g, cfg, 4), f1);
  EXPECT_EQ(extract_all(g, cfg, 0), f1);
}

TEST(ExtractAll, EquivariantUnderRelabeling) {
  const Graph g = generate_pair({300, 0.0, 0.9, 3, PMode::log_n}).a;
  const FeatureConfig cfg{4, 2, 0};
  const FeatureMatrix f = extract_all(g, cfg);
  for (std::uint64_t k = 0; k < 20; ++k) {
    const Permutation sigma = random_permutation(g.num_nodes(), 100 + k);
    const FeatureMatrix fp = extract_all(permute_graph(g, sigma), cfg);
    for (NodeId i = 0; i < g.num_nodes(); ++i) {
      ASSERT_TRUE(std::ranges::equal(fp.row(sigma[i]), f.row(i))) << "node " << i;
    }
  }
}

TEST(ExtractAll, EntriesAreNearbyDegreesAndTailsAreOrdered) {
  std::mt19937_64 rng(41);
  const auto edges = oracle::random_edges(40, 0.08, rng);
  const Graph g = build_graph(40, edges);
  const auto dist = oracle::all_pairs_distance(oracle::dense_adjacency(40, edges));
  const FeatureConfig cfg{3, 2, -1};
  const FeatureMatrix f = extract_all(g, cfg);
  for (NodeId i = 0; i < 40; ++i) {
    std::set<Feature> nearby;
    for (NodeId j = 0; j < 40; ++j) {
      if (dist[i][j] >= 1 && dist[i][j] <= 2) nearby.insert(static_cast<Feature>(g.degree(j)));
    }
    const auto row = f.row(i);
    for (Feature v : row) {
      if (v != cfg.pad_value) EXPECT_TRUE(nearby.count(v)) << "node " << i << " value " << v;
    }
    for (unsigned t = 0; t < cfg.lambda; ++t) {
      const auto block = row.subspan(2 * cfg.theta * t, 2 * cfg.theta);
      for (unsigned q = 0; q < cfg.theta; ++q) {
        if (block[q] == cfg.pad_value) continue;
        EXPECT_LE(block[q], block[cfg.theta + q]);
        if (q > 0 && block[q] != cfg.pad_value) EXPECT_LE(block[q - 1], block[q]);
      }
    }
  }
}

TEST(SimilarityMatrix, WorkedExampleEntries) {
  const FeatureMatrix fa = extract_all(toy::graph_a(), toy_cfg());
  const FeatureMatrix fb = extract_all(toy::graph_b(), toy_cfg());
  const SimilarityMatrix x = similarity_matrix(fa, fb);
  EXPECT_EQ(x(5, 12), 0.0);
  EXPECT_EQ(x(18, 9), 1.0);
  EXPECT_NEAR(x(18, 12), std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(x(5, 9), std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(x(18, 12), 1.73, 0.005);
  EXPECT_NEAR(x(5, 9), 2.45, 0.005);
}

TEST(SimilarityMatrix, ZeroExactlyOnEqualSignatures) {
  const FeatureMatrix fa = extract_all(toy::graph_a(), toy_cfg());
  const SimilarityMatrix x = similarity_matrix(fa, fa);
  for (std::size_t i = 0; i < fa.rows(); ++i) {
    for (std::size_t j = 0; j < fa.rows(); ++j) {
      EXPECT_GE(x(i, j), 0.0);
      EXPECT_EQ(x(i, j) == 0.0, std::ranges::equal(fa.row(i), fa.row(j)));
    }
  }
}

TEST(SimilarityMatrix, TriangleInequality) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<Feature> value(0, 30);
  FeatureMatrix f(30, 8);
  for (std::size_t i = 0; i < 30; ++i) {
    for (auto& v : f.row(i)) v = value(rng);
  }
  const SimilarityMatrix x = similarity_matrix(f, f);
  for (std::size_t i = 0; i < 30; ++i) {
    for (std::size_t j = 0; j < 30; ++j) {
      for (std::size_t k = 0; k < 30; ++k) EXPECT_LE(x(i, k), x(i, j) + x(j, k) + 1e-12);
    }
  }
}

TEST(SimilarityMatrix, RejectsWidthMismatch) {
  EXPECT_THROW(similarity_matrix(single_row({1, 2}), single_row({1, 2, 3, 4})), InputError);
}

TEST(SimilarityMatrix, ThreadCountDoesNotChangeBits) {
  const FeatureMatrix fa = extract_all(generate_parent(150, 0.05, 1), {});
  const FeatureMatrix fb = extract_all(generate_parent(150, 0.05, 2), {});
  const SimilarityMatrix x1 = similarity_matrix(fa, fb, 1);
  const SimilarityMatrix x4 = similarity_matrix(fa, fb, 4);
  for (std::size_t i = 0; i < 150; ++i) EXPECT_TRUE(std::ranges::equal(x1.row(i), x4.row(i)));
}

TEST(FeaturesCsv, HeaderAndRows) {
  std::ostringstream os;
  write_features_csv(os, extract_all(build_graph(2, std::vector<Edge>{{0, 1}}), {1, 1, 0}));
  EXPECT_EQ(os.str(), "node,f0,f1\n0,1,1\n1,1,1\n");
}

}  // namespace
}  // namespace tds
