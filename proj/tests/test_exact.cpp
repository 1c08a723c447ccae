#include <gtest/gtest.h>

#include <set>

#include "orientkit.hpp"
#include "support/oracle.hpp"

using namespace orientkit;

TEST(Extend, GreedyIsProperWithinMaxDegree) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = oracle::random_graph(2 + static_cast<int>(seed % 20), 0.35, seed);
    auto d = greedy_orientation(g);
    ASSERT_TRUE(is_proper(d)) << "seed " << seed;
    EXPECT_LE(max_indegree(d), g.max_degree());
  }
}

TEST(Extend, SourceStaysSource) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = oracle::random_graph(3 + static_cast<int>(seed % 12), 0.5, seed + 1000);
    Vertex u = static_cast<Vertex>(seed % static_cast<std::uint64_t>(g.n()));
    if (g.degree(u) == 0) continue;
    auto d = source_orientation(g, u);
    EXPECT_TRUE(is_proper(d));
    EXPECT_EQ(d.indegree(u), 0);
    EXPECT_LE(max_indegree(d), g.max_degree());
  }
}

TEST(Extend, KeepsGivenPartOfClique) {
  // K_5 with S = {0,1} oriented 0 -> 1.
  Graph g = complete_graph(5);
  std::vector<Vertex> s{0, 1};
  std::vector<Arc> arcs{{0, 1}};
  auto d = extend_partial(g, s, arcs);
  EXPECT_TRUE(is_proper(d));
  EXPECT_EQ(d.indegree(0), 0);
  EXPECT_EQ(d.indegree(1), 1);
}

TEST(Extend, PreconditionNamesVertices) {
  // Star centre 0 in S with indegree 0 ... leaves have one S-neighbour, 1 > 0 holds.
  // Path 0-1-2, S = {0,1} with 0 -> 1: vertex 2 has one S-neighbour but d(1) = 1.
  Graph g = path_graph(3);
  std::vector<Vertex> s{0, 1};
  std::vector<Arc> arcs{{0, 1}};
  try {
    extend_partial(g, s, arcs);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated);
    EXPECT_NE(std::string(e.what()).find("vertex 2"), std::string::npos);
  }
  std::vector<Arc> outside{{1, 2}};
  EXPECT_THROW(extend_partial(g, s, outside), Error);
}

TEST(Exact, DecisionMatchesEnumeration) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = oracle::random_graph_capped(3 + static_cast<int>(seed % 6), 0.6, 12, seed);
    for (int k = 0; k <= g.max_degree(); ++k) {
      bool truth = oracle::count_proper(g, k) > 0;
      auto r = decide_k_orientation(g, k);
      ASSERT_EQ(r.status == SearchStatus::Yes, truth) << "seed " << seed << " k " << k;
      if (r.witness) {
        EXPECT_TRUE(is_proper(*r.witness));
        EXPECT_LE(max_indegree(*r.witness), k);
      }
    }
  }
}

TEST(Exact, EnumerationCountsMatchOracle) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Graph g = oracle::random_graph_capped(3 + static_cast<int>(seed % 5), 0.6, 10, seed + 77);
    for (int k = 0; k <= g.max_degree(); ++k) {
      std::set<std::vector<std::uint8_t>> seen;
      auto st = enumerate_proper_k_orientations(g, k, [&](const Orientation& d) {
        EXPECT_TRUE(is_proper(d));
        seen.insert(d.directions());
        return true;
      });
      EXPECT_NE(st, SearchStatus::BudgetExceeded);
      std::uint64_t expected = g.n() == 0 ? 1 : oracle::count_proper(g, k);
      if (g.m() == 0) expected = 1;
      EXPECT_EQ(seen.size(), expected) << "seed " << seed << " k " << k;
    }
  }
}

TEST(Exact, OptimumMatchesOracleAndFrozenValues) {
  // Values frozen from the 2^m enumeration oracle.
  EXPECT_EQ(proper_orientation_number(path_graph(2)).value, 1);
  EXPECT_EQ(proper_orientation_number(path_graph(5)).value, 2);
  EXPECT_EQ(proper_orientation_number(cycle_graph(4)).value, 2);
  EXPECT_EQ(proper_orientation_number(cycle_graph(5)).value, 2);
  EXPECT_EQ(proper_orientation_number(complete_graph(5)).value, 4);
  EXPECT_EQ(proper_orientation_number(star_graph(6)).value, 1);
  EXPECT_EQ(oracle::proper_orientation_number(cycle_graph(5)), 2);
  EXPECT_EQ(oracle::proper_orientation_number(path_graph(5)), 2);
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Graph g = oracle::random_graph_capped(3 + static_cast<int>(seed % 7), 0.5, 12, seed + 300);
    auto r = proper_orientation_number(g);
    ASSERT_EQ(r.status, SearchStatus::Yes);
    EXPECT_EQ(r.value, oracle::proper_orientation_number(g)) << "seed " << seed;
    EXPECT_TRUE(is_proper(r.witness));
    EXPECT_EQ(max_indegree(r.witness), r.value);
  }
}

TEST(Exact, EdgeOrderAndSymmetryDoNotChangeAnswers) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = oracle::random_graph_capped(4 + static_cast<int>(seed % 6), 0.5, 14, seed + 900);
    SearchConfig plain;
    plain.edge_order = EdgeOrder::Natural;
    plain.symmetry_breaking = false;
    plain.split_components = false;
    EXPECT_EQ(proper_orientation_number(g).value, proper_orientation_number(g, plain).value) << "seed " << seed;
  }
}

TEST(Exact, BudgetIsReported) {
  Graph g = random_class_instance(RandomClass::Gnm, {.size = 14, .density = 0.5}, 4);
  SearchConfig cfg;
  cfg.node_budget = 5;
  auto r = proper_orientation_number(g, cfg);
  EXPECT_EQ(r.status, SearchStatus::BudgetExceeded);
  EXPECT_LE(r.lower, r.value);
  EXPECT_TRUE(is_proper(r.witness));
  auto d = decide_k_orientation(g, g.max_degree() - 1, cfg);
  EXPECT_EQ(d.status, SearchStatus::BudgetExceeded);
}

TEST(Exact, BadKAndTrivialGraphs) {
  EXPECT_THROW(decide_k_orientation(path_graph(3), -1), Error);
  EXPECT_EQ(decide_k_orientation(path_graph(3), 0).status, SearchStatus::No);
  EXPECT_EQ(decide_k_orientation(Graph(4, std::vector<std::pair<Vertex, Vertex>>{}), 0).status, SearchStatus::Yes);
  EXPECT_EQ(proper_orientation_number(Graph()).value, 0);
}

TEST(Exact, DisjointUnionRule) {
  std::vector<int> vals{1, 4, 2};
  EXPECT_EQ(disjoint_union_rule(vals), 4);
  EXPECT_THROW(disjoint_union_rule(std::span<const int>{}), Error);
  Graph g = disjoint_union(complete_graph(4), cycle_graph(5));
  EXPECT_EQ(proper_orientation_number(g).value, 3);
}

TEST(Exact, FptChordal) {
  EXPECT_THROW(fpt_chordal(cycle_graph(4), 2), Error);
  EXPECT_EQ(fpt_chordal(complete_graph(6), 3).status, SearchStatus::No);  // omega >= k+2
  EXPECT_EQ(fpt_chordal(complete_graph(5), 4).status, SearchStatus::Yes);
  Graph g = gen_split_tight(2);
  EXPECT_EQ(fpt_chordal(g, 1).status, SearchStatus::No);
  EXPECT_EQ(fpt_chordal(g, 2).status, SearchStatus::Yes);
}

TEST(Exact, DecisionAgreesWithEdgeEnumerationOnLargerGraphs) {
  // Past the 2^m oracle's reach: the edge-by-edge enumerator is an unrelated
  // search, so agreement on existence is a useful cross-check.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = oracle::random_graph_capped(9 + static_cast<int>(seed % 4), 0.4, 24, seed + 4242);
    int lo = std::max(0, oracle::clique_number(g) - 1);
    for (int k = lo; k <= lo + 2 && k <= g.max_degree(); ++k) {
      bool any = false;
      auto st = enumerate_proper_k_orientations(g, k, [&](const Orientation&) {
        any = true;
        return false;
      });
      ASSERT_NE(st, SearchStatus::BudgetExceeded);
      EXPECT_EQ(decide_k_orientation(g, k).status == SearchStatus::Yes, any) << "seed " << seed << " k " << k;
    }
  }
}
