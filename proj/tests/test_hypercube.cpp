#include <gtest/gtest.h>

#include <bit>

#include "oracles.hpp"
#include "udg/hypercube.hpp"

using namespace udg;

namespace {

int weight(const Point& p) { return static_cast<int>(std::count(p.begin(), p.end(), 1)); }

}  // namespace

TEST(HammingGraph, Examples) {
  const auto c52 = hamming_graph(5, 2);
  EXPECT_EQ(c52.graph.vertex_count(), 32);
  EXPECT_EQ(degree_profile(c52.graph).max_degree, 10);
  EXPECT_TRUE(degree_profile(c52.graph).regular);
  EXPECT_EQ(c52.cloud.adjacency_sq_dist, 2);

  const auto c104 = hamming_graph(10, 4);
  EXPECT_EQ(c104.graph.vertex_count(), 1024);
  EXPECT_EQ(degree_profile(c104.graph).min_degree, 210);
  EXPECT_TRUE(degree_profile(c104.graph).regular);
}

TEST(HammingGraph, Rejections) {
  EXPECT_THROW(hamming_graph(3, 4), std::invalid_argument);
  EXPECT_THROW(hamming_graph(17, 2), std::invalid_argument);
  EXPECT_THROW(hamming_graph(4, 0), std::invalid_argument);
  try {
    hamming_graph(3, 4);
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "u exceeds d");
  }
}

TEST(HammingGraph, LexicographicVerticesAndExactDistance) {
  const auto c = hamming_graph(4, 2);
  for (int v = 1; v < c.graph.vertex_count(); ++v) EXPECT_LT(c.cloud.points[v - 1], c.cloud.points[v]);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j)
      EXPECT_EQ(c.graph.adjacent(i, j), squared_distance(c.cloud.points[i], c.cloud.points[j]) == 2);
}

TEST(HammingGraph, XorTranslationsAreAutomorphisms) {
  for (int d = 2; d <= 6; ++d)
    for (int u = 1; u <= d; ++u) {
      const auto g = hamming_graph(d, u).graph;
      for (int t = 0; t < g.vertex_count(); ++t)
        for (int i = 0; i < g.vertex_count(); ++i)
          for (int j = 0; j < g.vertex_count(); ++j)
            ASSERT_EQ(g.adjacent(i, j), g.adjacent(i ^ t, j ^ t));
    }
}

TEST(HammingGraph, EvenDistanceNeverJoinsParityClasses) {
  for (int d = 2; d <= 11; ++d)
    for (int u = 2; u <= d; u += 2) {
      const auto c = hamming_graph(d, u);
      for (auto [i, j] : c.graph.edges())
        ASSERT_EQ(weight(c.cloud.points[i]) % 2, weight(c.cloud.points[j]) % 2) << "C(" << d << "," << u << ")";
    }
}

TEST(HammingGraph, ParityClassesIsomorphicByFlippingFirstCoordinate) {
  for (int d = 2; d <= 8; ++d)
    for (int u = 2; u <= d; u += 2) {
      const auto c = hamming_graph(d, u);
      const int top = 1 << (d - 1);  // coordinate 0 is the most significant bit
      std::vector<int> even, odd;
      for (int v = 0; v < c.graph.vertex_count(); ++v) (std::popcount(unsigned(v)) % 2 ? odd : even).push_back(v);
      for (int a : even)
        for (int b : even) ASSERT_EQ(c.graph.adjacent(a, b), c.graph.adjacent(a ^ top, b ^ top));
      for (int a : even) ASSERT_EQ(std::popcount(unsigned(a ^ top)) % 2, 1);
    }
}

TEST(HalfCube, Examples) {
  EXPECT_EQ(half_cube(5, 2).graph.vertex_count(), 16);
  EXPECT_EQ(half_cube(10, 4).graph.vertex_count(), 512);
  EXPECT_EQ(half_cube(11, 4).graph.vertex_count(), 1024);
  EXPECT_THROW(half_cube(6, 3), std::invalid_argument);
}

TEST(HalfCube, IsEvenWeightInducedSubgraph) {
  for (int d = 2; d <= 9; ++d)
    for (int u = 2; u <= d; u += 2) {
      const auto h = half_cube(d, u);
      ASSERT_EQ(h.graph.vertex_count(), 1 << (d - 1));
      for (const auto& p : h.cloud.points) ASSERT_EQ(weight(p) % 2, 0);
      const auto c = hamming_graph(d, u);
      VertexSet keep(c.graph.vertex_count());
      for (int v = 0; v < c.graph.vertex_count(); ++v)
        if (weight(c.cloud.points[v]) % 2 == 0) keep.insert(v);
      ASSERT_EQ(induced_subgraph(c.graph, keep).graph, h.graph);
    }
}

TEST(HalfCube, ComponentCountsAreReportedNotAssumed) {
  // Even class of C(4,4): {0000, 1111} plus three complementary pairs of weight-2 vectors.
  const auto h44 = half_cube(4, 4).graph;
  EXPECT_EQ(connected_components(h44).size(), 4U);
  EXPECT_EQ(oracle::component_count(h44), 4);
  EXPECT_EQ(connected_components(half_cube(6, 2).graph).size(), 1U);
}

TEST(SliceGraph, Examples) {
  const auto s = slice_graph(10, 4, 5);
  EXPECT_EQ(s.graph.vertex_count(), 252);
  const auto p = degree_profile(s.graph);
  EXPECT_TRUE(p.regular);
  EXPECT_EQ(p.min_degree, 100);

  const auto zero = slice_graph(7, 2, 0);
  EXPECT_EQ(zero.graph.vertex_count(), 1);
  EXPECT_EQ(zero.graph.edge_count(), 0);

  const auto s42 = slice_graph(4, 2, 2);
  EXPECT_EQ(s42.graph.vertex_count(), 6);
  EXPECT_EQ(degree_profile(s42.graph).min_degree, 4);
  EXPECT_TRUE(degree_profile(s42.graph).regular);

  EXPECT_THROW(slice_graph(5, 2, 6), std::invalid_argument);
  EXPECT_THROW(slice_graph(5, 2, -1), std::invalid_argument);
}

TEST(SliceGraph, DegreeFormula) {
  for (int d = 1; d <= 10; ++d)
    for (int u = 2; u <= d; u += 2)
      for (int s = 0; s <= d; ++s) {
        const auto g = slice_graph(d, u, s).graph;
        ASSERT_EQ(g.vertex_count(), binomial(d, s));
        const auto p = degree_profile(g);
        ASSERT_TRUE(p.regular);
        ASSERT_EQ(p.max_degree, binomial(s, u / 2) * binomial(d - s, u / 2)) << d << "," << u << "," << s;
      }
}

TEST(AppendZeroEmbedding, PreservesEdgesAndNonEdges) {
  for (int d = 2; d <= 7; ++d)
    for (int u = 1; u <= d; ++u) {
      const auto small = hamming_graph(d, u);
      const auto big = hamming_graph(d + 1, u);
      const auto map = append_zero_embedding(d, u);
      for (int i = 0; i < small.graph.vertex_count(); ++i) {
        Point expected = small.cloud.points[i];
        expected.push_back(0);
        ASSERT_EQ(big.cloud.points[map[i]], expected);
        for (int j = 0; j < small.graph.vertex_count(); ++j)
          ASSERT_EQ(small.graph.adjacent(i, j), big.graph.adjacent(map[i], map[j]));
      }
    }
}
