#include <gtest/gtest.h>

#include "orientkit.hpp"
#include "support/oracle.hpp"

using namespace orientkit;

namespace {

bool is_chordless_cycle(const Graph& g, const std::vector<Vertex>& c) {
  const std::size_t len = c.size();
  if (len < 4) return false;
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(c[i], c[j]) != consecutive) return false;
    }
  return true;
}

}  // namespace

TEST(Chordal, MatchesBruteForceWithWitnesses) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = oracle::random_graph(4 + static_cast<int>(seed % 8), 0.3 + 0.05 * static_cast<double>(seed % 8), seed);
    auto r = chordal_peo(g);
    ASSERT_EQ(r.chordal, !oracle::has_induced_long_cycle(g)) << "seed " << seed;
    if (r.chordal)
      EXPECT_TRUE(is_peo(g, r.peo));
    else
      EXPECT_TRUE(is_chordless_cycle(g, r.cycle)) << "seed " << seed;
  }
}

TEST(Chordal, SmallCases) {
  EXPECT_TRUE(is_chordal(Graph()));
  EXPECT_TRUE(is_chordal(complete_graph(6)));
  EXPECT_FALSE(is_chordal(cycle_graph(4)));
  auto r = chordal_peo(cycle_graph(6));
  EXPECT_EQ(r.cycle.size(), 6u);
}

TEST(Cliques, MatchBruteForce) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Graph g = oracle::random_graph(3 + static_cast<int>(seed % 11), 0.5, seed * 7 + 1);
    auto c = max_clique(g);
    EXPECT_TRUE(is_clique(g, c));
    EXPECT_EQ(static_cast<int>(c.size()), oracle::clique_number(g)) << "seed " << seed;
  }
}

TEST(Cliques, ChordalVersionRejectsBadOrder) {
  Graph g = cycle_graph(4);
  std::vector<Vertex> order{0, 1, 2, 3};
  EXPECT_THROW(max_clique_chordal(g, order), Error);
}

TEST(Split, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = seed % 2 ? random_class_instance(RandomClass::Split, {.size = 3 + static_cast<int>(seed % 10)}, seed)
                       : oracle::random_graph(3 + static_cast<int>(seed % 9), 0.45, seed);
    auto p = split_partition(g);
    ASSERT_EQ(p.has_value(), oracle::is_split(g)) << "seed " << seed;
    if (p) {
      EXPECT_TRUE(is_valid_split_partition(g, *p));
      EXPECT_EQ(static_cast<int>(p->clique.size()), oracle::clique_number(g)) << "maximal K is maximum";
    }
  }
}

TEST(Split, PartitionValidatorChecksMaximality) {
  // K_2 plus a vertex adjacent to both: {0,1} | {2} is not maximal.
  Graph g = complete_graph(3);
  EXPECT_FALSE(is_valid_split_partition(g, {{0, 1}, {2}}));
  EXPECT_TRUE(is_valid_split_partition(g, {{0, 1, 2}, {}}));
}

TEST(Cograph, CotreeRebuildsGraphOrFindsP4) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = seed % 2 ? random_class_instance(RandomClass::Cograph, {.size = 2 + static_cast<int>(seed % 12)}, seed)
                       : oracle::random_graph(2 + static_cast<int>(seed % 9), 0.5, seed);
    auto r = cograph_cotree(g);
    ASSERT_EQ(r.cotree.has_value(), !oracle::has_induced_p4(g)) << "seed " << seed;
    if (r.cotree) {
      EXPECT_EQ(r.cotree->evaluate(), g);
    } else {
      ASSERT_EQ(r.p4.size(), 4u);
      auto& p = r.p4;
      EXPECT_TRUE(g.adjacent(p[0], p[1]) && g.adjacent(p[1], p[2]) && g.adjacent(p[2], p[3]));
      EXPECT_FALSE(g.adjacent(p[0], p[2]) || g.adjacent(p[0], p[3]) || g.adjacent(p[1], p[3]));
    }
  }
}

TEST(QuasiThreshold, RecognizesForestClosuresOnly) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = random_class_instance(RandomClass::QuasiThreshold, {.size = 1 + static_cast<int>(seed % 15)}, seed);
    auto t = quasi_threshold_cotree(g);
    ASSERT_TRUE(t.has_value()) << "seed " << seed;
    EXPECT_EQ(t->evaluate(), g);
  }
  EXPECT_FALSE(quasi_threshold_cotree(path_graph(4)).has_value());
  EXPECT_FALSE(quasi_threshold_cotree(cycle_graph(4)).has_value());  // a cograph, not chordal
  EXPECT_TRUE(quasi_threshold_cotree(star_graph(5)).has_value());
}

TEST(ClawFree, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Graph g = oracle::random_graph(4 + static_cast<int>(seed % 8), 0.4, seed + 99);
    EXPECT_EQ(is_claw_free(g), !oracle::has_claw(g)) << "seed " << seed;
  }
}

TEST(Twins, PartitionOfIndependentSet) {
  // Two K_3 corners: I-vertices 3,4 see {0,1}; 5 sees {2}; 6 sees {0,1}.
  GraphBuilder b(7);
  std::vector<Vertex> k{0, 1, 2};
  b.add_clique(k);
  for (Vertex x : {3, 4, 6}) b.add_edge(x, 0), b.add_edge(x, 1);
  b.add_edge(5, 2);
  Graph g = b.build();
  std::vector<Vertex> s{3, 4, 5, 6};
  auto parts = twin_partition(g, s);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], (std::vector<Vertex>{3, 4, 6}));
  std::vector<Vertex> not_indep{0, 3};
  EXPECT_THROW(twin_partition(g, not_indep), Error);
}

TEST(BlockCut, CutVerticesMatchDeletionTest) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = oracle::random_graph(3 + static_cast<int>(seed % 10), 0.3, seed + 5);
    auto t = block_cut_tree(g);
    EXPECT_EQ(t.cut_vertices, oracle::cut_vertices(g)) << "seed " << seed;
    // Blocks partition the edges.
    int total = 0;
    for (int c : t.block_edges) total += c;
    EXPECT_EQ(total, g.m());
  }
}

TEST(BlockCut, UniformBlockGenerators) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int k = 3 + static_cast<int>(seed % 2);
    Graph g = random_class_instance(RandomClass::TwoCutBlock, {.size = 1 + static_cast<int>(seed % 12), .k = k}, seed);
    auto t = block_cut_tree(g);
    EXPECT_TRUE(is_block_graph(t));
    EXPECT_TRUE(is_k_uniform(t, k));
    EXPECT_LE(max_cut_vertices_per_block(t), 2);
    auto rt = root_block_tree(t, 0);
    EXPECT_EQ(rt.bfs_blocks.size(), static_cast<std::size_t>(t.block_count()));
  }
  EXPECT_FALSE(is_block_graph(block_cut_tree(cycle_graph(4))));
}

TEST(BlockCut, RootingDisconnectedFails) {
  auto t = block_cut_tree(disjoint_union(complete_graph(3), complete_graph(3)));
  EXPECT_THROW(root_block_tree(t, 0), Error);
}

TEST(Strip, RecognizesGeneratedStrips) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    int tri = 1 + static_cast<int>(seed % 30);
    Graph g = random_class_instance(RandomClass::Strip, {.size = tri, .fan_bias = 0.8}, seed);
    auto s = maximal_outerplane_weak_dual(g);
    ASSERT_TRUE(s.has_value()) << "seed " << seed;
    EXPECT_EQ(static_cast<int>(s->triangles.size()), tri);
    EXPECT_EQ(static_cast<int>(s->outer_cycle.size()), g.n());
    // Consecutive triangles share an edge.
    for (std::size_t i = 0; i + 1 < s->triangles.size(); ++i) {
      int common = 0;
      for (Vertex a : s->triangles[i])
        for (Vertex b : s->triangles[i + 1]) common += a == b;
      EXPECT_EQ(common, 2);
    }
  }
}

TEST(Strip, RejectsNonStrips) {
  EXPECT_FALSE(maximal_outerplane_weak_dual(complete_graph(4)).has_value());
  EXPECT_FALSE(maximal_outerplane_weak_dual(cycle_graph(5)).has_value());
  // Triangle with a triangle glued to each side: weak dual is a claw.
  GraphBuilder b(6);
  for (auto [x, y] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}})
    b.add_edge(x, y);
  EXPECT_FALSE(maximal_outerplane_weak_dual(b.build()).has_value());
  EXPECT_TRUE(maximal_outerplane_weak_dual(complete_graph(3)).has_value());
}
