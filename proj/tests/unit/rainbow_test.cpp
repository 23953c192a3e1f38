#include <gtest/gtest.h>

#include <random>

#include "matchrb/antiramsey.hpp"
#include "matchrb/extremal.hpp"
#include "matchrb/gadgets.hpp"
#include "matchrb/io.hpp"
#include "matchrb/rainbow.hpp"
#include "oracles.hpp"

namespace matchrb {
namespace {

EdgeColoring three_perfect_matchings() {
  // c(a1a2)=c(a3a4)=1, c(a1a3)=c(a2a4)=2, c(a1a4)=c(a2a3)=3; edges 01 02 03 12 13 23.
  return EdgeColoring(4, {1, 2, 3, 3, 2, 1});
}

TEST(MaxRainbow, Fixtures) {
  EXPECT_EQ(max_rainbow_matching(three_perfect_matchings()).size, 1);
  EXPECT_EQ(max_rainbow_matching(EdgeColoring::rainbow(6)).size, 3);
  EXPECT_EQ(max_rainbow_matching(EdgeColoring::monochromatic(6)).size, 1);
}

TEST(MaxRainbow, WitnessIsRainbow) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    const auto col = testing::random_coloring(n, 1 + static_cast<int>(rng() % 8), rng);
    const auto r = max_rainbow_matching(col);
    EXPECT_TRUE(is_rainbow_matching(col, r.witness.edges));
    EXPECT_EQ(r.witness.size(), r.size);
    EXPECT_EQ(static_cast<int>(r.colors_used.size()), r.size);
  }
}

// Solver exactness against exhaustive enumeration of all matchings.
TEST(MaxRainbow, AgreesWithEnumeration) {
  std::mt19937_64 rng(77);
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 300; ++trial) {
      const int palette = 1 + static_cast<int>(rng() % std::min(pair_count(n), 10));
      const auto col = testing::random_coloring(n, palette, rng);
      ASSERT_EQ(max_rainbow_matching(col).size, testing::brute_max_rainbow(col))
          << serialize_coloring(col);
    }
  }
}

TEST(HasRainbow, Fixtures) {
  EXPECT_FALSE(has_rainbow_k_matching(three_perfect_matchings(), 2).found);
  const auto q = has_rainbow_k_matching(EdgeColoring::rainbow(6), 3);
  ASSERT_TRUE(q.found);
  EXPECT_EQ(q.witness->size(), 3);
  EXPECT_THROW(has_rainbow_k_matching(EdgeColoring::rainbow(5), 3), std::invalid_argument);
}

TEST(HasRainbow, LowerBoundTenFour) {
  const auto col = lower_bound_coloring(10, 4).to_coloring();
  EXPECT_FALSE(has_rainbow_k_matching(col, 4).found);
  EXPECT_EQ(testing::brute_max_rainbow(col), 3);
}

TEST(LowerBoundColoring, Fixtures) {
  const auto k4 = lower_bound_coloring(4, 2);
  EXPECT_EQ(k4.kind, GadgetKind::kK4ThreePM);
  EXPECT_EQ(k4.palette, 3);
  EXPECT_EQ(k4.to_coloring(), three_perfect_matchings());

  const auto six = lower_bound_coloring(6, 3);
  EXPECT_EQ(six.kind, GadgetKind::kLBGeneric);
  EXPECT_EQ(six.construction, "join");
  EXPECT_EQ(six.palette, 6);
  // The rainbow part is the star at vertex 0.
  const auto col = six.to_coloring();
  for (Vertex v = 1; v < 6; ++v) EXPECT_EQ(col.color(0, v), v);
  EXPECT_EQ(col.color(1, 2), 6);

  const auto big = lower_bound_coloring(14, 7);
  EXPECT_EQ(big.kind, GadgetKind::kLB2K);
  EXPECT_EQ(big.palette, 57);
}

TEST(LowerBoundColoring, TwoKConstructionStructure) {
  const auto gc = lower_bound_coloring(16, 8);
  const auto col = gc.to_coloring();
  const Vertex a1 = 13, a2 = 14, a3 = 15;
  EXPECT_EQ(col.color(a1, a3), col.color(a2, a3));
  EXPECT_NE(col.color(a1, a2), col.color(a1, a3));
  for (Vertex h = 0; h < 13; ++h) {
    EXPECT_EQ(col.color(a3, h), col.color(a1, a2));
    EXPECT_EQ(col.color(a1, h), col.color(a1, a3));
    EXPECT_EQ(col.color(a2, h), col.color(a1, a3));
  }
  EXPECT_EQ(col.color_count(), 80);
}

TEST(LowerBoundColoring, DomainErrors) {
  EXPECT_THROW(lower_bound_coloring(5, 3), DomainError);
  EXPECT_THROW(lower_bound_coloring(6, 1), DomainError);
}

TEST(LowerBoundColoring, ColorCountIsRbMinusOne) {
  for (int k = 2; k <= 8; ++k)
    for (int n = 2 * k; n <= 20; ++n)
      EXPECT_EQ(lower_bound_coloring(n, k).palette, rb_formula(n, k).rb - 1) << n << "," << k;
}

TEST(Gadgets, SG1Labels) {
  const auto gc = gadget_coloring(GadgetKind::kSG1, 3, 6);
  EXPECT_EQ(gc.palette, 6);
  EXPECT_EQ(gc.colored_subgraph().edge_count(), 6);
  EXPECT_EQ(gc.free_edges().size(), 9U);
  auto at = [&](Vertex u, Vertex v) { return gc.colors[edge_index(6, u, v)]; };
  // u1,u2,u3 = 0,1,2; v1,v2,v3 = 3,4,5.
  EXPECT_EQ(at(0, 1), 1);
  EXPECT_EQ(at(1, 2), 2);
  EXPECT_EQ(at(0, 2), 3);
  EXPECT_EQ(at(3, 4), 4);
  EXPECT_EQ(at(4, 5), 5);
  EXPECT_EQ(at(3, 5), 6);
}

TEST(Gadgets, SG2aTriangleAndPath) {
  const auto gc = gadget_coloring(GadgetKind::kSG2a, 3, 7);
  EXPECT_EQ(gc.palette, 5);
  const Graph g = gc.colored_subgraph();
  EXPECT_EQ(g.edge_count(), 5);
  EXPECT_TRUE(g.has_edge(3, 4));
  EXPECT_TRUE(g.has_edge(4, 5));
  EXPECT_FALSE(g.has_edge(3, 5));
}

TEST(Gadgets, Shapes) {
  for (int k = 3; k <= 7; ++k) {
    const std::int64_t big = choose2(2 * k - 3);
    EXPECT_EQ(gadget_coloring(GadgetKind::kSG1, k, 2 * k).palette, big + 3);
    EXPECT_EQ(gadget_coloring(GadgetKind::kSG2a, k, 2 * k + 1).palette, big + 2);
    EXPECT_EQ(gadget_coloring(GadgetKind::kSG2b, k, 2 * k + 1).palette, big + 2);
    const auto sg3 = gadget_coloring(GadgetKind::kSG3, k, 2 * k);
    EXPECT_EQ(sg3.palette, big + 3);
    // SG3 carries a maximum matching of size k - 1.
    EXPECT_EQ(matching_number(sg3.colored_subgraph()), k - 1);
    EXPECT_FALSE(sg3.colored_subgraph().has_edge(0, 1));  // x z
  }
}

TEST(Gadgets, DomainErrors) {
  EXPECT_THROW(gadget_coloring(GadgetKind::kSG1, 3, 5), DomainError);
  EXPECT_THROW(gadget_coloring(GadgetKind::kSG2a, 3, 6), DomainError);
  EXPECT_THROW(gadget_coloring(GadgetKind::kSG1, 2, 6), DomainError);
  EXPECT_THROW(gadget_coloring(GadgetKind::kLBGeneric, 3, 6), DomainError);
}

TEST(CompleteGadget, ReuseOnly) {
  const auto gc = gadget_coloring(GadgetKind::kSG1, 3, 6);
  const auto col = complete_gadget(gc, std::vector<Color>(9, 1));
  EXPECT_EQ(col.color_count(), 6);
  std::vector<Color> bad(9, 1);
  bad[4] = 7;
  EXPECT_THROW(complete_gadget(gc, bad), ColoringError);
  EXPECT_THROW(complete_gadget(gc, std::vector<Color>(8, 1)), ColoringError);
}

TEST(CompleteGadget, MapForm) {
  const auto gc = gadget_coloring(GadgetKind::kSG1, 3, 6);
  std::map<Edge, Color> a;
  for (const Edge& e : gc.free_edges()) a[e] = 2;
  EXPECT_EQ(complete_gadget(gc, a), complete_gadget(gc, std::vector<Color>(9, 2)));
  a.erase(a.begin());
  EXPECT_THROW(complete_gadget(gc, a), ColoringError);
}

TEST(CompleteGadget, SampledCompletionsSmall) {
  std::mt19937_64 rng(5);
  RainbowSolver solver;
  for (GadgetKind kind : {GadgetKind::kSG1, GadgetKind::kSG2a, GadgetKind::kSG2b}) {
    const int n = kind == GadgetKind::kSG1 ? 6 : 7;
    const auto gc = gadget_coloring(kind, 3, n);
    std::uniform_int_distribution<Color> pick(1, gc.palette);
    std::vector<Color> a(gc.free_edges().size());
    for (int trial = 0; trial < 2000; ++trial) {
      for (Color& c : a) c = pick(rng);
      solver.reset(complete_gadget(gc, a));
      ASSERT_TRUE(solver.find(3).has_value()) << to_string(kind);
    }
  }
}

TEST(GadgetJson, Sidecar) {
  const std::string j = gadget_json(gadget_coloring(GadgetKind::kSG3, 4, 8));
  EXPECT_NE(j.find("\"kind\": \"SG3\""), std::string::npos);
  EXPECT_NE(j.find("\"x\": 0"), std::string::npos);
  EXPECT_NE(j.find("colored_edges"), std::string::npos);
}

TEST(RepresentativeSubgraph, Fixtures) {
  EXPECT_EQ(representative_subgraph(EdgeColoring::monochromatic(4)).edge_count(), 1);
  EXPECT_EQ(representative_subgraph(EdgeColoring::rainbow(4)).edge_count(), 6);
  const Graph g = representative_subgraph(three_perfect_matchings());
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(RepresentativeSubgraph, NoLargeMatchingWhenRainbowFree) {
  for (int k = 2; k <= 6; ++k) {
    for (int n = 2 * k; n <= 14; ++n) {
      const auto col = lower_bound_coloring(n, k).to_coloring();
      const Graph g = representative_subgraph(col);
      EXPECT_EQ(g.edge_count(), col.color_count());
      EXPECT_LT(matching_number(g), k);
    }
  }
}

}  // namespace
}  // namespace matchrb
