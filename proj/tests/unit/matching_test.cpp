#include <gtest/gtest.h>

#include <random>

#include "matchrb/graph.hpp"
#include "matchrb/io.hpp"
#include "matchrb/matching.hpp"
#include "oracles.hpp"

namespace matchrb {
namespace {

Graph path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

TEST(MaxMatching, SmallFixtures) {
  EXPECT_EQ(max_matching(complete_graph(3)).size(), 1);
  EXPECT_EQ(max_matching(path(4)).size(), 2);
  EXPECT_EQ(max_matching(complete_graph(6)).size(), 3);
  EXPECT_EQ(max_matching(Graph(5)).size(), 0);
}

TEST(MaxMatching, LexicographicallyLeast) {
  // P4: the only maximum matching is {01, 23}.
  EXPECT_EQ(max_matching(path(4)).edges, (std::vector<Edge>{{0, 1}, {2, 3}}));
  // K4: {01, 23} is lexicographically least among three.
  EXPECT_EQ(max_matching(complete_graph(4)).edges, (std::vector<Edge>{{0, 1}, {2, 3}}));
  // C6 has two perfect matchings; {01, 23, 45} comes first.
  EXPECT_EQ(max_matching(cycle(6)).edges, (std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}}));
  // Path 2-0-1-3: the lexicographically first edge 01 is in no maximum matching.
  Graph g(4, {{0, 1}, {0, 2}, {1, 3}});
  EXPECT_EQ(max_matching(g).edges, (std::vector<Edge>{{0, 2}, {1, 3}}));
}

TEST(MaxMatching, LexLeastAgreesWithEnumeration) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = testing::random_graph(n, 0.4, rng);
    std::vector<Edge> least;
    int best = -1;
    testing::for_each_matching(g, [&](const std::vector<Edge>& m) {
      std::vector<Edge> s = m;
      std::sort(s.begin(), s.end());
      if (static_cast<int>(s.size()) > best || (static_cast<int>(s.size()) == best && s < least)) {
        best = static_cast<int>(s.size());
        least = s;
      }
    });
    EXPECT_EQ(max_matching(g).edges, least);
  }
}

// Property: blossom size equals the exhaustive maximum, 1000 graphs per order.
TEST(MaxMatching, AgreesWithBruteForceUpToTenVertices) {
  std::mt19937_64 rng(42);
  for (int n = 1; n <= 10; ++n) {
    for (int trial = 0; trial < 1000; ++trial) {
      const double p = 0.1 + 0.8 * static_cast<double>(trial % 9) / 8.0;
      const Graph g = testing::random_graph(n, p, rng);
      const int expected = testing::brute_matching_number(g);
      ASSERT_EQ(matching_number(g), expected) << serialize_graph(g);
      const Matching m = max_matching(g);
      ASSERT_TRUE(is_matching(m.edges, &g));
      ASSERT_EQ(m.size(), expected);
    }
  }
}

TEST(BipartiteDeficiency, CompleteThreeTwo) {
  // A = {0,1,2}, B = {3,4}.
  const BipartitionedGraph bg(complete_bipartite(3, 2), to_mask({0, 1, 2}), to_mask({3, 4}));
  EXPECT_EQ(testing::brute_deficiency(bg.graph, bg.side_a), 1);  // oracle, 8 subsets
  const Deficiency d = bipartite_deficiency(bg);
  EXPECT_EQ(d.d, 1);
  EXPECT_EQ(d.witness, bg.side_a);
  EXPECT_EQ(d.matching.size(), 2);
}

TEST(BipartiteDeficiency, StarFromA) {
  Graph g(4, {{0, 3}, {1, 3}, {2, 3}});
  const BipartitionedGraph bg(g, to_mask({0, 1, 2}), to_mask({3}));
  const Deficiency d = bipartite_deficiency(bg);
  EXPECT_EQ(d.d, 2);
  EXPECT_EQ(d.matching.size(), 1);
}

TEST(BipartiteDeficiency, PerfectK33) {
  const BipartitionedGraph bg(complete_bipartite(3, 3), to_mask({0, 1, 2}), to_mask({3, 4, 5}));
  const Deficiency d = bipartite_deficiency(bg);
  EXPECT_EQ(d.d, 0);
  EXPECT_EQ(d.matching.size(), 3);
}

TEST(BipartiteDeficiency, RejectsBadBipartition) {
  Graph g(3, {{0, 1}, {1, 2}});
  EXPECT_THROW(BipartitionedGraph(g, to_mask({0, 1}), to_mask({2})), GraphError);
  EXPECT_THROW(BipartitionedGraph(g, to_mask({0}), to_mask({1})), GraphError);
}

// Ore's identity on random bipartite graphs; both deficiency routes agree.
TEST(BipartiteDeficiency, OreIdentityAndRoutesAgree) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int a = 1 + static_cast<int>(rng() % 10);
    const int b = 1 + static_cast<int>(rng() % 10);
    std::bernoulli_distribution coin(0.05 + 0.5 * static_cast<double>(trial % 7) / 6.0);
    Graph g(a + b);
    for (Vertex u = 0; u < a; ++u)
      for (Vertex v = a; v < a + b; ++v)
        if (coin(rng)) g.add_edge(u, v);
    const BipartitionedGraph bg(g, all_vertices(a), all_vertices(a + b) & ~all_vertices(a));
    const int d = testing::brute_deficiency(g, bg.side_a);
    ASSERT_EQ(testing::brute_matching_number(g), a - d);
    const Deficiency e = deficiency_by_enumeration(bg);
    const Deficiency p = deficiency_by_alternating_paths(bg);
    ASSERT_EQ(e.d, d);
    ASSERT_EQ(p.d, d);
    ASSERT_EQ(popcount(p.witness) - popcount(g.neighbors(p.witness)), d);
    ASSERT_EQ(popcount(e.witness) - popcount(g.neighbors(e.witness)), d);
    ASSERT_EQ(e.matching.size(), a - d);
  }
}

TEST(BipartiteDeficiency, LargeSideUsesAlternatingPaths) {
  // |A| = 24 > 20: star-like graph, 24 A-vertices on 3 B-vertices.
  const BipartitionedGraph bg(complete_bipartite(24, 3), all_vertices(24),
                              all_vertices(27) & ~all_vertices(24));
  const Deficiency d = bipartite_deficiency(bg);
  EXPECT_EQ(d.d, 21);
  EXPECT_EQ(d.matching.size(), 3);
}

TEST(FactorCritical, Fixtures) {
  EXPECT_TRUE(is_factor_critical(complete_graph(3)));
  EXPECT_TRUE(is_factor_critical(cycle(5)));
  EXPECT_FALSE(is_factor_critical(path(3)));
  EXPECT_TRUE(is_factor_critical(Graph(1)));
  EXPECT_FALSE(is_factor_critical(complete_graph(4)));
}

TEST(FactorCritical, ImpliesOddAndConnected) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = testing::random_graph(n, 0.5, rng);
    if (!is_factor_critical(g)) continue;
    EXPECT_EQ(n % 2, 1);
    EXPECT_EQ(g.components(g.vertices()).size(), 1U);
  }
}

TEST(NearPerfect, Fixtures) {
  EXPECT_EQ(near_perfect_matching_avoiding(complete_graph(3), 0).edges,
            (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(near_perfect_matching_avoiding(complete_graph(3), 2).edges,
            (std::vector<Edge>{{0, 1}}));
  // C5 minus vertex 0 is the path 1-2-3-4.
  EXPECT_EQ(near_perfect_matching_avoiding(cycle(5), 0).edges,
            (std::vector<Edge>{{1, 2}, {3, 4}}));
  // P3 is not factor-critical (deleting the centre leaves two isolated vertices).
  EXPECT_THROW(near_perfect_matching_avoiding(path(3), 0), MatchingError);
  EXPECT_THROW(near_perfect_matching_avoiding(path(3), 1), MatchingError);
}

}  // namespace
}  // namespace matchrb
