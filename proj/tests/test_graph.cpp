#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "udg/graph.hpp"
#include "udg/hypercube.hpp"

using namespace udg;

namespace {

Graph triangle() {
  GraphBuilder b(3, "triangle");
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(0, 2);
  return std::move(b).build();
}

void expect_symmetric_loop_free(const Graph& g) {
  for (int i = 0; i < g.vertex_count(); ++i) {
    EXPECT_FALSE(g.adjacent(i, i));
    for (int j = 0; j < g.vertex_count(); ++j) EXPECT_EQ(g.adjacent(i, j), g.adjacent(j, i));
  }
}

}  // namespace

TEST(VertexSet, CardinalityIsPopcount) {
  VertexSet s(130, {0, 63, 64, 129});
  EXPECT_EQ(s.size(), 4);
  EXPECT_EQ(s.members(), (std::vector<int>{0, 63, 64, 129}));
  EXPECT_EQ(s.complement().size(), 126);
  EXPECT_FALSE(s.complement().contains(129));
  EXPECT_THROW(s.insert(130), std::out_of_range);
  EXPECT_THROW(s |= VertexSet(129), std::invalid_argument);
}

TEST(GraphBuilder, RejectsSelfLoop) {
  GraphBuilder b(2);
  EXPECT_THROW(b.add_edge(1, 1), std::invalid_argument);
}

TEST(GraphFromPoints, OrthogonalRootsAreAdjacent) {
  PointCloud c{8, {{2, 2, 0, 0, 0, 0, 0, 0}, {0, 0, 2, 2, 0, 0, 0, 0}}, 16};
  const auto g = graph_from_points(c);
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(GraphFromPoints, SinglePoint) {
  PointCloud c{3, {{1, 2, 3}}, 1};
  const auto g = graph_from_points(c);
  EXPECT_EQ(g.vertex_count(), 1);
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(GraphFromPoints, DuplicateReportsIndexPair) {
  PointCloud c{2, {{0, 0}, {1, 0}, {0, 0}}, 1};
  try {
    (void)graph_from_points(c);
    FAIL() << "expected DuplicatePointError";
  } catch (const DuplicatePointError& e) {
    EXPECT_EQ(e.first(), 0);
    EXPECT_EQ(e.second(), 2);
  }
}

TEST(GraphFromPoints, OrderEquivariant) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    PointCloud c{4, {}, 4};
    std::set<Point> seen;
    while (c.points.size() < 14) {
      Point p{coord(rng), coord(rng), coord(rng), coord(rng)};
      if (seen.insert(p).second) c.points.push_back(p);
    }
    std::vector<int> perm(c.points.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    PointCloud shuffled = c;
    for (std::size_t k = 0; k < perm.size(); ++k) shuffled.points[k] = c.points[perm[k]];
    const auto g = graph_from_points(c);
    const auto h = graph_from_points(shuffled);
    expect_symmetric_loop_free(g);
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = 0; b < perm.size(); ++b)
        ASSERT_EQ(h.adjacent(static_cast<int>(a), static_cast<int>(b)), g.adjacent(perm[a], perm[b]));
  }
}

TEST(InducedSubgraph, AllAndNothing) {
  const auto g = hamming_graph(4, 2).graph;
  const auto all = induced_subgraph(g, VertexSet::full(g.vertex_count()));
  EXPECT_EQ(all.graph, g);
  for (int v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(all.old_of_new[v], v);
  const auto none = induced_subgraph(g, VertexSet(g.vertex_count()));
  EXPECT_EQ(none.graph.vertex_count(), 0);
}

TEST(InducedSubgraph, WeightFiveLayerOfC10_4) {
  const auto g = hamming_graph(10, 4);
  VertexSet keep(g.graph.vertex_count());
  for (int v = 0; v < g.graph.vertex_count(); ++v)
    if (std::count(g.cloud.points[v].begin(), g.cloud.points[v].end(), 1) == 5) keep.insert(v);
  const auto sub = induced_subgraph(g.graph, keep);
  EXPECT_EQ(sub.graph.vertex_count(), 252);
  const auto p = degree_profile(sub.graph);
  EXPECT_TRUE(p.regular);
  EXPECT_EQ(p.min_degree, 100);
}

TEST(InducedSubgraph, EdgeCountMatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const auto g = oracle::random_graph(n, 0.4, rng);
    VertexSet keep(n);
    for (int v = 0; v < n; ++v)
      if (rng() & 1U) keep.insert(v);
    std::int64_t expected = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (keep.contains(i) && keep.contains(j) && g.adjacent(i, j)) ++expected;
    const auto sub = induced_subgraph(g, keep);
    EXPECT_EQ(sub.graph.edge_count(), expected);
    expect_symmetric_loop_free(sub.graph);
  }
}

TEST(DegreeProfile, Examples) {
  auto p = degree_profile(hamming_graph(5, 2).graph);
  EXPECT_EQ(p.min_degree, 10);
  EXPECT_EQ(p.max_degree, 10);
  EXPECT_TRUE(p.regular);
  p = degree_profile(hamming_graph(10, 4).graph);
  EXPECT_EQ(p.min_degree, 210);
  EXPECT_TRUE(p.regular);
  p = degree_profile(edgeless_graph(1));
  EXPECT_EQ(p.min_degree, 0);
  EXPECT_EQ(p.max_degree, 0);
  EXPECT_TRUE(p.regular);
  p = degree_profile(Graph{});
  EXPECT_EQ(p.max_degree, 0);
  EXPECT_TRUE(p.regular);
}

TEST(ConnectedComponents, Examples) {
  const auto g = hamming_graph(6, 2).graph;
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0].size(), 32);
  EXPECT_EQ(comps[1].size(), 32);
  EXPECT_TRUE(comps[0].contains(0));
  EXPECT_EQ(oracle::component_count(g), 2);
  EXPECT_EQ(connected_components(complete_graph(5)).size(), 1U);
  EXPECT_EQ(connected_components(edgeless_graph(7)).size(), 7U);
}

TEST(ConnectedComponents, AgreesWithUnionFind) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(1 + static_cast<int>(rng() % 20), 0.1, rng);
    const auto comps = connected_components(g);
    EXPECT_EQ(static_cast<int>(comps.size()), oracle::component_count(g));
    int total = 0;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      total += comps[k].size();
      if (k) EXPECT_LT(comps[k - 1].members().front(), comps[k].members().front());
    }
    EXPECT_EQ(total, g.vertex_count());
  }
}

TEST(Bipartite, Examples) {
  const auto c53 = hamming_graph(5, 3).graph;
  const auto side = bipartition(c53);
  ASSERT_TRUE(side.has_value());
  for (auto [i, j] : c53.edges()) EXPECT_NE((*side)[i], (*side)[j]);
  EXPECT_FALSE(is_bipartite(triangle()));
  EXPECT_FALSE(is_bipartite(hamming_graph(4, 2).graph));
}

TEST(Bipartite, OddDistanceCubesAreBipartite) {
  for (int d = 1; d <= 8; ++d)
    for (int u = 1; u <= d; u += 2) EXPECT_TRUE(is_bipartite(hamming_graph(d, u).graph)) << d << "," << u;
}

TEST(Bipartite, AgreesWithBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const double p = trial % 3 == 0 ? 0.15 : trial % 3 == 1 ? 0.3 : 0.5;
    const auto g = oracle::random_graph(n, p, rng);
    ASSERT_EQ(is_bipartite(g), oracle::bipartite(g));
  }
}

TEST(RatioLowerBound, Examples) {
  EXPECT_EQ(ratio_lower_bound(512, 20), 26);
  EXPECT_EQ(ratio_lower_bound(289, 16), 19);
  EXPECT_EQ(ratio_lower_bound(1024, 32), 32);
  EXPECT_EQ(ratio_lower_bound(252, 12), 21);
  EXPECT_EQ(ratio_lower_bound(17, 17), 1);
  EXPECT_THROW(ratio_lower_bound(5, 0), std::invalid_argument);
}

TEST(RatioLowerBound, UniqueIntegerBracket) {
  for (std::int64_t n = 1; n <= 200; ++n)
    for (std::int64_t a = 1; a <= 60; ++a) {
      const auto k = ratio_lower_bound(n, a);
      ASSERT_LT((k - 1) * a, n);
      ASSERT_LE(n, k * a);
    }
}

TEST(BoundReport, ChiLowerFollowsAlpha) {
  const auto r = make_bound_report("H(10,4)", 512, 20);
  EXPECT_EQ(r.chi_lower, 26);
  EXPECT_FALSE(make_bound_report("x", 5, std::nullopt).chi_lower.has_value());
}
