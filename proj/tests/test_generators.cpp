#include <gtest/gtest.h>

#include "floodit/generators.hpp"
#include "floodit/solvers.hpp"
#include "oracles.hpp"

using namespace floodit;

TEST(Families, Basic) {
  auto p = path_graph(5);
  EXPECT_EQ(p->size(), 5);
  EXPECT_EQ(p->edge_count(), 4u);
  EXPECT_EQ(cycle_graph(6)->edge_count(), 6u);
  EXPECT_EQ(star_graph(3)->degree(0), 3);
  auto grid = grid_graph(2, 10);
  EXPECT_EQ(grid->size(), 20);
  EXPECT_EQ(grid->edge_count(), 28u);
  EXPECT_THROW(cycle_graph(2), GeneratorError);
  EXPECT_THROW(path_graph(0), GeneratorError);
}

TEST(Families, TreeTcr) {
  auto t21 = tree_Tcr(2, 1);
  EXPECT_EQ(t21->size(), 2);
  auto t22 = tree_Tcr(2, 2);
  EXPECT_EQ(t22->size(), 5);
  EXPECT_EQ(t22->edge_count(), 4u);
  EXPECT_EQ(radius(*t22), 2);
  auto t31 = tree_Tcr(3, 1);
  EXPECT_EQ(t31->size(), 5);
  EXPECT_EQ(t31->degree(0), 4);
  for (auto [c, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 5}, {3, 1}, {3, 2}, {4, 2}}) {
    auto t = tree_Tcr(c, r);
    EXPECT_EQ(radius(*t), r) << c << "," << r;
    EXPECT_EQ(static_cast<int>(t->edge_count()), t->size() - 1);
  }
  EXPECT_THROW(tree_Tcr(1, 2), GeneratorError);
}

TEST(Families, Blowups) {
  auto f = blowup_path({2, 2, 2});
  EXPECT_EQ(f.graph->size(), 6);
  EXPECT_EQ(f.graph->edge_count(), 8u);
  ASSERT_TRUE(f.blowup);
  auto cls = f.blowup->class_of();
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v) EXPECT_EQ(f.graph->has_edge(u, v), std::abs(cls[u] - cls[v]) == 1);

  auto cyc = blowup_cycle({1, 2, 3, 1});
  auto cc = cyc.blowup->class_of();
  for (Vertex u = 0; u < cyc.graph->size(); ++u)
    for (Vertex v = u + 1; v < cyc.graph->size(); ++v) {
      int gap = std::abs(cc[u] - cc[v]);
      EXPECT_EQ(cyc.graph->has_edge(u, v), gap == 1 || gap == 3);
    }
  EXPECT_THROW(blowup_path({2, 0}), GeneratorError);
  EXPECT_THROW(blowup_cycle({2, 2}), GeneratorError);
}

TEST(Families, PathColouredBlowupContractsToPath) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::mt19937_64 rng(seed);
    int t = 2 + static_cast<int>(rng() % 20);
    std::vector<int> sizes(t);
    for (auto& s : sizes) s = 1 + static_cast<int>(rng() % 3);
    auto f = blowup_path(sizes);
    auto seq = random_proper_sequence(t, 3, seed);
    // Classes are independent, so contraction alone keeps a blow-up shape;
    // once each class is made a clique it collapses to the coloured path.
    auto es = f.graph->edges();
    for (const auto& cl : f.blowup->classes)
      for (std::size_t a = 0; a < cl.size(); ++a)
        for (std::size_t b = a + 1; b < cl.size(); ++b) es.emplace_back(cl[a], cl[b]);
    auto g = ColouredGraph(std::make_shared<const Graph>(f.graph->size(), es), class_colouring(*f.blowup, seq), 3);
    auto con = contract(g);
    EXPECT_EQ(con.graph.size(), t);
    ASSERT_TRUE(path_order(con.graph.shape()).has_value());
    EXPECT_EQ(path_colour_sequence(g), seq);
    auto plain = contract(ColouredGraph(f.graph, class_colouring(*f.blowup, seq), 3));
    EXPECT_EQ(plain.graph.size(), f.graph->size());
  }
}

TEST(Colourings, RainbowPath) {
  EXPECT_EQ(rainbow_sequence(5, 2), (std::vector<Colour>{0, 1, 0, 1, 0}));
  EXPECT_EQ(rainbow_sequence(5, 3, 1), (std::vector<Colour>{2, 0, 1, 2, 0}));
  for (int c = 1; c <= 6; ++c)
    for (int n = 1; n <= 20; ++n)
      for (int r = 0; r < c; ++r) EXPECT_TRUE(is_rainbow_sequence(rainbow_sequence(n, c, r), c));
  EXPECT_FALSE(is_rainbow_sequence(std::vector<Colour>{0, 1, 2, 1}, 3));
  EXPECT_TRUE(is_rainbow_sequence(std::vector<Colour>{2, 1, 0, 2}, 3));
}

TEST(Colourings, BalancedClasses) {
  for (int c = 2; c <= 6; ++c)
    for (int n = 1; n <= 40; ++n)
      for (int r = 0; r < c; ++r) {
        auto seq = rainbow_sequence(n, c, r);
        std::vector<int> count(c, 0);
        for (Colour x : seq) ++count[x];
        auto [lo, hi] = std::minmax_element(count.begin(), count.end());
        EXPECT_LE(*hi - *lo, 1);
        EXPECT_EQ(*hi, ceil_div(n, c));
      }
}

TEST(Colourings, CycleRainbow) {
  auto seq = cycle_rainbow_sequence(6, 3);
  EXPECT_NE(seq.front(), seq.back());
  EXPECT_THROW(cycle_rainbow_sequence(7, 3), GeneratorError);
  EXPECT_THROW(cycle_rainbow_sequence(5, 2), GeneratorError);
  for (int c = 2; c <= 4; ++c)
    for (int n = 3; n <= 12; ++n) {
      if (n % c == 1) continue;
      auto s = cycle_rainbow_sequence(n, c);
      for (int i = 0; i < n; ++i) EXPECT_NE(s[i], s[(i + 1) % n]);
    }
}

TEST(Colourings, ScrSequences) {
  auto s32 = scr_sequences(3, 2);
  EXPECT_EQ(s32.size(), 4u);
  EXPECT_EQ(s32, (std::vector<std::vector<Colour>>{{1, 0}, {1, 2}, {2, 0}, {2, 1}}));
  for (int c = 2; c <= 4; ++c)
    for (int r = 1; r <= 4; ++r) {
      int expected = 1;
      for (int i = 0; i < r; ++i) expected *= c - 1;
      EXPECT_EQ(static_cast<int>(scr_sequences(c, r).size()), expected);
    }
}

TEST(Colourings, ScrTreeDealsEachSequenceEvenly) {
  const int c = 3, r = 2;
  auto col = scr_tree_colouring(c, r);
  auto seqs = scr_sequences(c, r);
  const int legs = tree_leg_count(c, r);
  EXPECT_EQ(legs, 16);
  std::map<std::vector<Colour>, int> seen;
  for (int leg = 0; leg < legs; ++leg) ++seen[{col.begin() + 1 + leg * r, col.begin() + 1 + (leg + 1) * r}];
  EXPECT_EQ(seen.size(), seqs.size());
  for (auto& [s, k] : seen) EXPECT_EQ(k, (c - 1) * r);
  EXPECT_EQ(col[0], 0);
}

TEST(Colourings, RemarkBichromatic) {
  auto [f, col] = remark_bichromatic(3, 3);
  EXPECT_EQ(col, (std::vector<Colour>{1, 2, 0, 1, 2, 0}));
  EXPECT_EQ(f.blowup->t(), 3);
}

TEST(Colourings, RandomFamilies) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto col = random_surjective_colouring(7, 4, seed);
    EXPECT_EQ(distinct_colours(col), 4);
    auto seq = random_proper_sequence(30, 3, seed);
    for (int i = 0; i + 1 < 30; ++i) EXPECT_NE(seq[i], seq[i + 1]);
    auto f = blowup_path(std::vector<int>(20, 2));
    auto bc = random_blowup_colouring(*f.blowup, 3, 5, seed);
    int theta = 0;
    for (const auto& cl : f.blowup->classes) theta += bc[cl[0]] != bc[cl[1]];
    EXPECT_EQ(theta, 5);
  }
  EXPECT_EQ(random_surjective_colouring(7, 4, 9), random_surjective_colouring(7, 4, 9));
  EXPECT_THROW(random_surjective_colouring(3, 4, 0), GeneratorError);
}

TEST(Colourings, GenDispatch) {
  auto f = gen_graph({FamilyKind::Path, 5});
  EXPECT_EQ(gen_colouring(f, {ColouringKind::Rainbow, 2}), (std::vector<Colour>{0, 1, 0, 1, 0}));
  auto star = gen_graph({FamilyKind::Star, 3});
  EXPECT_THROW(gen_colouring(star, {ColouringKind::Rainbow, 2}), GeneratorError);
  FamilySpec tree{FamilyKind::TreeTcr};
  tree.c = 2;
  tree.r = 2;
  auto t = gen_graph(tree);
  EXPECT_EQ(gen_colouring(t, {ColouringKind::ScrTree, 2}), (std::vector<Colour>{0, 1, 0, 1, 0}));
}

TEST(SmallGraphs, Counts) {
  auto all = enumerate_small_graphs(7);
  std::vector<int> per(8, 0);
  for (const auto& g : all) {
    ++per[g.size()];
    EXPECT_TRUE(g.connected());
  }
  EXPECT_EQ(per, (std::vector<int>{0, 1, 1, 2, 6, 21, 112, 853}));
  EXPECT_EQ(enumerate_small_graphs(2).size(), 2u);
  EXPECT_EQ(enumerate_small_graphs(3).size(), 4u);
  EXPECT_EQ(enumerate_small_graphs(4).size(), 10u);
  EXPECT_THROW(enumerate_small_graphs(8), GeneratorError);
}

TEST(SmallGraphs, MatchBruteForceClasses) {
  auto all = enumerate_small_graphs(5);
  for (int n = 1; n <= 5; ++n) {
    auto classes = oracle::connected_classes(n);
    std::set<std::vector<Edge>> ours;
    for (const auto& g : all) {
      if (g.size() != n) continue;
      // Map each enumerated graph to the oracle's canonical representative.
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::optional<std::vector<Edge>> best;
      do {
        std::vector<Edge> img;
        for (auto [u, v] : g.edges()) img.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
        std::sort(img.begin(), img.end());
        if (!best || img < *best) best = img;
      } while (std::next_permutation(perm.begin(), perm.end()));
      EXPECT_TRUE(ours.insert(*best).second) << "duplicate class at n=" << n;
    }
    EXPECT_EQ(ours, classes) << "n=" << n;
  }
}
