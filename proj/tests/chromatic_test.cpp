#include <gtest/gtest.h>

#include <random>

#include "chromstab/chromatic.hpp"
#include "chromstab/constructions.hpp"
#include "chromstab/enumerate.hpp"
#include "support/test_oracles.hpp"

namespace chromstab {
namespace {

Graph cycle(int n) { return standard_graph(StandardKind::cycle, n); }
Graph complete(int n) { return standard_graph(StandardKind::complete, n); }

TEST(IsKColorableTest, OddCycleIsNotBipartite) { EXPECT_FALSE(is_k_colorable(cycle(5), 2)); }

TEST(IsKColorableTest, EvenCycleAlternates) {
  const auto c = is_k_colorable(cycle(6), 2);
  ASSERT_TRUE(c);
  EXPECT_TRUE(c->is_proper(cycle(6)));
  for (int v = 0; v < 6; ++v) EXPECT_NE(c->colors[v], c->colors[(v + 1) % 6]);
  EXPECT_EQ(c->colors[0], c->colors[2]);
  EXPECT_EQ(c->colors[0], c->colors[4]);
}

TEST(IsKColorableTest, PetersenAgainstExhaustiveScan) {
  const Graph p = petersen();
  // 3^10 and 2^10 color vectors.
  ASSERT_TRUE(testing::brute_colorable(p, 3, p.vertices()));
  ASSERT_FALSE(testing::brute_colorable(p, 2, p.vertices()));
  const auto three = is_k_colorable(p, 3);
  ASSERT_TRUE(three);
  EXPECT_TRUE(three->is_proper(p));
  EXPECT_FALSE(is_k_colorable(p, 2));
}

TEST(IsKColorableTest, ZeroColors) {
  EXPECT_TRUE(is_k_colorable(Graph(), 0));
  EXPECT_FALSE(is_k_colorable(Graph(1), 0));
  EXPECT_TRUE(is_k_colorable(Graph(1), 0, VertexSet{}));
}

TEST(IsKColorableTest, MaskedSubgraph) {
  const Graph k4 = complete(4);
  EXPECT_FALSE(is_k_colorable(k4, 3));
  const auto c = is_k_colorable(k4, 3, VertexSet{0, 2, 3});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->colors[1], Coloring::kUncolored);
  EXPECT_TRUE(c->is_proper(k4));
}

TEST(IsKColorableTest, IsDeterministic) {
  const Graph g = gnk(2, 3).graph;
  const auto a = is_k_colorable(g, 3);
  const auto b = is_k_colorable(g, 3);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->colors, b->colors);
}

TEST(IsKColorableTest, AgreesWithExhaustiveScanOnSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : LabeledGraphs(n)) {
      for (int k = 0; k <= 3; ++k) {
        const auto c = is_k_colorable(g, k);
        ASSERT_EQ(c.has_value(), testing::brute_colorable(g, k, g.vertices()));
        if (c) ASSERT_TRUE(c->is_proper(g));
      }
    }
  }
}

TEST(ChromaticNumberTest, Examples) {
  EXPECT_EQ(chromatic_number(complete(5)).chi, 5);
  EXPECT_EQ(chromatic_number(petersen()).chi, 3);
  EXPECT_EQ(chromatic_number(gnk(2, 3).graph).chi, 3);
  EXPECT_EQ(chromatic_number(Graph(4)).chi, 1);
  EXPECT_EQ(chromatic_number(Graph()).chi, 0);
}

TEST(ChromaticNumberTest, WitnessUsesExactlyChiColors) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : LabeledGraphs(n)) {
      const ChromaticResult r = chromatic_number(g);
      ASSERT_TRUE(r.coloring.is_proper(g));
      ASSERT_EQ(r.coloring.k, r.chi);
      ASSERT_EQ(r.coloring.colors_used(), r.chi);
    }
  }
}

TEST(ChromaticNumberTest, AgreesWithOracleOnAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : LabeledGraphs(n)) ASSERT_EQ(chromatic_number(g).chi, chromatic_oracle(g));
  }
}

TEST(ChromaticNumberTest, AgreesWithOracleOnRandomGraphs) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> order(6, 8);
  std::uniform_real_distribution<double> density(0.2, 0.9);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::random_graph(rng, order(rng), density(rng));
    ASSERT_EQ(chromatic_number(g).chi, chromatic_oracle(g));
  }
}

TEST(ChromaticNumberTest, SingleVertexDeletionLowersChiByAtMostOne) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : LabeledGraphs(n)) {
      const int chi = chromatic_number(g).chi;
      for (int v = 0; v < n; ++v) {
        const int after = chromatic_number(g, g.vertices() - VertexSet{v});
        ASSERT_LE(after, chi);
        ASSERT_GE(after, chi - 1);
      }
    }
  }
}

TEST(ChromaticOracleTest, Examples) {
  EXPECT_EQ(chromatic_oracle(cycle(7)), 3);
  const std::vector<Edge> one{{0, 1}};
  EXPECT_EQ(chromatic_oracle(delete_edges(complete(4), one)), 3);
  EXPECT_THROW(chromatic_oracle(petersen()), PreconditionError);
}

TEST(GreedyCliqueTest, Examples) {
  EXPECT_EQ(greedy_clique_lower_bound(complete(6)), 6);
  EXPECT_EQ(greedy_clique_lower_bound(cycle(5)), 2);
  const Graph p = petersen();
  bool triangle = false;
  for (const Edge& e : p.edges()) triangle = triangle || !(p.neighbors(e.u) & p.neighbors(e.v)).empty();
  ASSERT_FALSE(triangle);
  EXPECT_EQ(greedy_clique_lower_bound(p), 2);
}

TEST(GreedyCliqueTest, NeverExceedsChi) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : LabeledGraphs(n)) {
      ASSERT_LE(greedy_clique_lower_bound(g), chromatic_number(g).chi);
      ASSERT_GE(greedy_dsatur(g).k, chromatic_number(g).chi);
      ASSERT_TRUE(greedy_dsatur(g).is_proper(g));
    }
  }
}

TEST(BrooksTest, Examples) {
  EXPECT_EQ(brooks_classify(complete(7)), BrooksClass::CompleteExtremal);
  EXPECT_EQ(brooks_classify(cycle(9)), BrooksClass::OddCycleExtremal);
  EXPECT_EQ(brooks_classify(petersen()), BrooksClass::NotExtremal);
  EXPECT_EQ(brooks_classify(cycle(6)), BrooksClass::NotExtremal);
  EXPECT_THROW(brooks_classify(Graph(2)), PreconditionError);
}

TEST(BrooksTest, ExtremalExactlyWhenChiIsDeltaPlusOne) {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : LabeledGraphs(n)) {
      if (!is_connected(g)) continue;
      const bool extremal = chromatic_number(g).chi == max_degree(g) + 1;
      ASSERT_EQ(extremal, brooks_classify(g) != BrooksClass::NotExtremal);
    }
  }
}

}  // namespace
}  // namespace chromstab
