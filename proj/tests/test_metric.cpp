#include "grt/metric.hpp"

#include <gtest/gtest.h>

#include <random>

#include "grt/tree.hpp"
#include "test_util.hpp"

using namespace grt;

TEST(PathMetric, SmallExamples) {
  DistanceMatrix path3 = path_metric(build_star(2));
  double max_entry = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) max_entry = std::max(max_entry, path3(i, j));
  EXPECT_EQ(max_entry, 2.0);

  // Two leaves of B_2 under different depth-1 vertices: up 2, down 2.
  RootedTree b2 = build_complete_nary(2, 2);
  DistanceMatrix m = path_metric(b2);
  EXPECT_EQ(m(3, 5), 4.0);
  EXPECT_EQ(m(3, 4), 2.0);
}

TEST(PathMetric, CombTwoTeethIsALineSegment) {
  // C_2 is isometric to the path 0,1,2,3: order tooth1, shaft1, shaft2,
  // tooth2.
  Comb c = build_comb(full_comb_teeth(2));
  DistanceMatrix m = path_metric(c.tree);
  const int order[4] = {c.tooth(1), c.shaft(1), c.shaft(2), c.tooth(2)};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      EXPECT_EQ(m(order[i], order[j]), std::abs(i - j));
}

TEST(PathMetric, MatchesFloydWarshall) {
  std::mt19937_64 eng(7);
  std::vector<RootedTree> trees{build_comb(full_comb_teeth(5)).tree,
                                build_complete_nary(3, 3),
                                build_ychain(2, 4),
                                grt_test::random_tree(40, eng)};
  for (const RootedTree& t : trees) {
    DistanceMatrix m = path_metric(t);
    auto oracle = grt_test::floyd_warshall(t);
    for (int i = 0; i < t.vertex_count(); ++i)
      for (int j = 0; j < t.vertex_count(); ++j)
        ASSERT_EQ(m(i, j), oracle[i][j]);
  }
}

TEST(PathMetric, MetricAxiomsOnLargeTrees) {
  // Symmetry and the zero diagonal are constructor-enforced; the triangle
  // inequality is checked here, up to ~500 vertices.
  for (const RootedTree& t : {build_sst({4, 3, 3, 3, 3}),  // 485 vertices
                              build_comb(full_comb_teeth(250)).tree,
                              build_kregular_truncation(3, 5)}) {
    DistanceMatrix m = path_metric(t);
    EXPECT_TRUE(m.satisfies_triangle_inequality());
  }
}

TEST(PathMetric, RefusesHugeTables) {
  EXPECT_THROW(path_metric(build_comb(full_comb_teeth(300)).tree, 500), Error);
}

TEST(DistanceMatrix, ValidatesShape) {
  EXPECT_THROW(DistanceMatrix(2, {0, 1, 2, 0}), Error);          // asymmetric
  EXPECT_THROW(DistanceMatrix(2, {1, 1, 1, 1}), Error);          // diagonal
  EXPECT_THROW(DistanceMatrix(2, {0, -1, -1, 0}), Error);        // negative
  EXPECT_THROW(DistanceMatrix(2, {0, 1, 1}), Error);             // count
  EXPECT_NO_THROW(DistanceMatrix(2, {0, 1.5, 1.5, 0}));
}

TEST(DistanceMatrix, Scaled) {
  DistanceMatrix m = path_metric(build_star(3));
  DistanceMatrix s = m.scaled(2.5);
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) EXPECT_EQ(s(i, j), 2.5 * m(i, j));
  EXPECT_THROW(m.scaled(0.0), Error);
  EXPECT_THROW(m.scaled(-1.0), Error);
}
