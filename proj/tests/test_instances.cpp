#include <gtest/gtest.h>

#include "orientkit.hpp"
#include "support/oracle.hpp"

using namespace orientkit;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Parse;
}

Graph k33() {
  GraphBuilder b(6);
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex c = 3; c < 6; ++c) b.add_edge(a, c);
  return b.build();
}

}  // namespace

TEST(Gadgets, SCountsAndChordality) {
  EXPECT_EQ(gen_S(0).graph.n(), 1);
  for (int k = 0; k <= 8; ++k) {
    auto s = gen_S(k);
    EXPECT_EQ(s.graph.n(), (k + 1) + k * (k + 1) / 2);
    EXPECT_TRUE(is_chordal(s.graph)) << k;
    EXPECT_EQ(static_cast<int>(s.meta.v.size()), k + 1);
  }
  EXPECT_EQ(gen_S(4).graph.n(), 15);
  EXPECT_EQ(gen_S(3).graph.m(), 20);  // frozen from the definition count
}

TEST(Gadgets, CanonicalOrientationHasRankIndegrees) {
  for (int k = 1; k <= 7; ++k) {
    auto s = gen_S(k);
    PartialOrientation p(s.graph);
    orient_gadget(p, s.meta);
    auto d = p.to_orientation();
    EXPECT_TRUE(is_proper(d));
    EXPECT_LE(max_indegree(d), k);
    for (int j = 0; j <= k; ++j) EXPECT_EQ(d.indegree(s.meta.v[j]), j);
  }
}

TEST(Gadgets, SForcingAtTwoExhaustive) {
  auto s = gen_S(2);
  int seen = 0;
  oracle::for_each_proper(s.graph, 2, [&](std::uint64_t, const std::vector<int>& in) {
    ++seen;
    for (int j = 0; j <= 2; ++j) EXPECT_EQ(in[s.meta.v[j]], j);
  });
  EXPECT_GT(seen, 0);
}

TEST(Gadgets, FShapeAndErrors) {
  auto f = gen_F(2, 2);
  EXPECT_EQ(f.graph.n(), gen_S(2).graph.n() + 1);
  EXPECT_EQ(f.graph.degree(f.meta.head), 1);
  EXPECT_TRUE(f.graph.adjacent(f.meta.head, f.meta.v[1]));
  EXPECT_EQ(kind_of([] { gen_F(5, 3); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { gen_F(1, 3); }), ErrorKind::BadParams);
}

TEST(Gadgets, FForcingOnSmallHostExhaustive) {
  // Host edge u - u' where u' is F(2,2)'s head; u is an extra leaf-side vertex.
  auto f = gen_F(2, 2);
  GraphBuilder b;
  b.append(f.graph);
  Vertex u = b.add_vertex();
  b.add_edge(u, f.meta.head);
  Graph g = b.build();
  EdgeId host = g.edge_id(u, f.meta.head);
  int seen = 0;
  oracle::for_each_proper(g, 2, [&](std::uint64_t mask, const std::vector<int>& in) {
    ++seen;
    EXPECT_EQ(in[f.meta.head], 2);
    Vertex head_of_host = (mask >> host) & 1 ? g.edge(host).hi : g.edge(host).lo;
    EXPECT_EQ(head_of_host, f.meta.head);
  });
  EXPECT_GT(seen, 0);
}

TEST(Gadgets, ZShape) {
  auto z2 = gen_Z(2);
  EXPECT_EQ(z2.graph.n(), 3);
  EXPECT_EQ(z2.graph.m(), 2);
  EXPECT_EQ(z2.graph.degree(z2.meta.s), 2);  // a path with the shared vertex in the middle
  auto z = gen_Z(3);
  EXPECT_EQ(z.graph.n(), 5);
  EXPECT_EQ(z.graph.m(), 6);
  EXPECT_EQ(z.graph.degree(z.meta.s), 4);
  EXPECT_THROW(gen_Z(1), Error);
}

TEST(Gadgets, ZCentreIsSourceExhaustive) {
  // Each clique of Z(k') is oriented transitively once indegrees stay below k',
  // and the shared vertex can only match its position in both cliques at 0.
  for (int kp : {2, 3}) {
    auto z = gen_Z(kp);
    int seen = 0;
    oracle::for_each_proper(z.graph, kp - 1, [&](std::uint64_t, const std::vector<int>& in) {
      ++seen;
      EXPECT_EQ(in[z.meta.s], 0);
    });
    EXPECT_GT(seen, 0);
  }
}

TEST(Reduction, K4Invariants) {
  auto red = reduce_vertex_cover(complete_graph(4), 3);
  EXPECT_EQ(red.k_prime, 6);
  EXPECT_TRUE(is_chordal(red.graph));
  // Frozen from BFS. In an F(2,k') the head sees only v_1 and the K^0 block
  // sees only v_0, so K^0 sits four steps from the host (x, v_0, v_1, head,
  // host). Two I-hosts with disjoint edges are three apart: 4 + 3 + 4.
  EXPECT_EQ(diameter(red.graph), 11);
  int kf = 0, i_f = 0, z = 0;
  for (const auto& m : red.gadgets) {
    bool on_k = std::find(red.clique.begin(), red.clique.end(), m.host) != red.clique.end();
    if (m.kind == GadgetKind::Z)
      ++z;
    else if (on_k)
      ++kf;
    else
      ++i_f;
  }
  EXPECT_EQ(kf, 2 * 4);
  EXPECT_EQ(i_f, 6);
  EXPECT_EQ(z, (3 - 1) * 6);
  // 10 core vertices, 8 + 6 pendant F(., 6) of 29 vertices, 12 Z(6) of 11.
  EXPECT_EQ(red.graph.n(), 10 + 14 * 29 + 12 * 11);
}

TEST(Reduction, Errors) {
  EXPECT_EQ(kind_of([] { reduce_vertex_cover(complete_graph(4), 1); }), ErrorKind::BadK);
  EXPECT_EQ(kind_of([] { reduce_vertex_cover(complete_graph(4), 5); }), ErrorKind::BadK);
  EXPECT_EQ(kind_of([] { reduce_vertex_cover(cycle_graph(5), 3); }), ErrorKind::NotCubic);
}

TEST(Reduction, CertificatesFromCovers) {
  auto red = reduce_vertex_cover(complete_graph(4), 3);
  auto d = build_vc_certificate(red, {0, 1, 2});
  EXPECT_TRUE(is_proper(d));
  EXPECT_LE(max_indegree(d), red.k_prime);
  for (Vertex x : red.independent) EXPECT_TRUE(d.indegree(x) == 3 || d.indegree(x) == 4);
  for (Vertex x : red.clique) {
    int in = d.indegree(x);
    EXPECT_TRUE(in <= 2 || (in >= 5 && in <= 6)) << in;
  }
  EXPECT_EQ(kind_of([&] { build_vc_certificate(red, {0}); }), ErrorKind::NotACover);

  auto red2 = reduce_vertex_cover(k33(), 3);
  EXPECT_TRUE(is_chordal(red2.graph));
  EXPECT_EQ(diameter(red2.graph), 11);
  auto d2 = build_vc_certificate(red2, {0, 1, 2});
  EXPECT_TRUE(is_proper(d2));
  EXPECT_LE(max_indegree(d2), red2.k_prime);
  // A smaller cover gets padded.
  auto red3 = reduce_vertex_cover(k33(), 4);
  EXPECT_TRUE(is_proper(build_vc_certificate(red3, {3, 4, 5})));
}

TEST(Kernels, SplitTruncatesTwinClasses) {
  // K_2 on {0,1}; eleven twins joined to 0 only. k = 2: M = 2*2 - 1 = 3.
  GraphBuilder b(13);
  b.add_edge(0, 1);
  for (Vertex x = 2; x < 13; ++x) b.add_edge(x, 0);
  Graph g = b.build();
  auto r = split_kernel(g, 2);
  EXPECT_FALSE(r.trivial_no);
  EXPECT_EQ(r.graph.n(), 2 + 4);
  for (int k = 1; k <= 3; ++k)
    EXPECT_EQ(decide_k_orientation(g, k).status, decide_k_orientation(split_kernel(g, k).graph, k).status);
}

TEST(Kernels, SplitTrivialCases) {
  auto r = split_kernel(complete_graph(5), 3);
  EXPECT_TRUE(r.trivial_no);
  EXPECT_EQ(r.graph, complete_graph(5));
  Graph small = gen_split_tight(2);
  EXPECT_EQ(split_kernel(small, 2).graph, small);
  EXPECT_EQ(kind_of([] { split_kernel(cycle_graph(4), 2); }), ErrorKind::NotSplit);
}

TEST(Kernels, Cobipartite) {
  auto r = cobipartite_kernel(complete_graph(8), 3);
  EXPECT_TRUE(r.trivial_no);
  EXPECT_EQ(r.graph, complete_graph(5));
  Graph c4 = cycle_graph(4);  // complement 2K_2 is bipartite
  auto same = cobipartite_kernel(c4, 3);
  EXPECT_FALSE(same.trivial_no);
  EXPECT_EQ(same.graph, c4);
  EXPECT_EQ(kind_of([] { cobipartite_kernel(Graph(3, std::vector<std::pair<Vertex, Vertex>>{}), 2); }),
            ErrorKind::NotCobipartite);
}

TEST(Tight, SplitCountsAndValue) {
  Graph g2 = gen_split_tight(2);
  EXPECT_EQ(g2.n(), 6);
  EXPECT_EQ(g2.m(), 5);
  EXPECT_EQ(oracle::proper_orientation_number(g2), 2);
  Graph g3 = gen_split_tight(3);
  EXPECT_EQ(g3.n(), 39);
  EXPECT_EQ(g3.m(), 57);
  EXPECT_EQ(clique_number(g3), 3);
  EXPECT_THROW(gen_split_tight(1), Error);
}

TEST(Tight, BlockFamily) {
  Graph g2 = gen_block_tight(2);
  EXPECT_EQ(g2.n(), 12);
  EXPECT_EQ(g2.m(), 11);
  EXPECT_TRUE(is_connected(g2));
  EXPECT_GE(proper_orientation_number(g2).value, 3);
  Graph g3 = gen_block_tight(3);
  auto t = block_cut_tree(g3);
  EXPECT_TRUE(is_k_uniform(t, 3));
  EXPECT_LE(max_cut_vertices_per_block(t), 2);
  EXPECT_THROW(gen_block_tight(1), Error);
}

TEST(Random, DeterministicAndInClass) {
  RandomParams p{.size = 12};
  EXPECT_EQ(random_class_instance(RandomClass::Split, p, 1), random_class_instance(RandomClass::Split, p, 1));
  EXPECT_TRUE(split_partition(random_class_instance("split", p, 1)));
  Graph strip = random_class_instance("strip", {.size = 20}, 7);
  EXPECT_TRUE(maximal_outerplane_weak_dual(strip));
  EXPECT_EQ(strip.n(), 22);
  Graph co = random_class_instance("cograph", {.size = 10}, 3);
  EXPECT_FALSE(oracle::has_induced_p4(co));
  EXPECT_EQ(kind_of([] { random_class_instance("nope", {}, 1); }), ErrorKind::BadParams);
}
