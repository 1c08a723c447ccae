#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "orientkit/error.hpp"
#include "orientkit/graph.hpp"
#include "orientkit/orientation.hpp"
#include "orientkit/recognizers.hpp"

namespace orientkit {

// ------------------------------------------------------------------- gadgets

enum class GadgetKind { S, F, Z };

inline const char* to_string(GadgetKind k) {
  switch (k) {
    case GadgetKind::S: return "S";
    case GadgetKind::F: return "F";
    case GadgetKind::Z: return "Z";
  }
  return "?";
}

/// Distinguished vertices of a gadget, in the gadget's own ids (or shifted by
/// `offset` once placed inside a larger graph).
struct GadgetMeta {
  GadgetKind kind = GadgetKind::S;
  int k = 0;              // k for S and F, k' for Z
  int i = 0;              // F only
  Vertex offset = 0;
  int size = 0;
  Vertex host = -1;       // vertex the gadget hangs from, when pendant
  std::vector<Vertex> v;  // v_0..v_k (S and F)
  Vertex head = -1;       // F
  Vertex s = -1;          // Z
  std::vector<int> rank;  // canonical indegree per gadget vertex (S part; head and Z handled apart)
};

struct Gadget {
  Graph graph;
  GadgetMeta meta;
};

/// S(k): clique v_0..v_k plus, for each j < k, a clique K^j on k-j fresh
/// vertices joined to v_j; v_j is also joined to every K^l with l > j.
inline Gadget gen_S(int k) {
  if (k < 0) fail(ErrorKind::BadParams, "S(k) needs k >= 0");
  GraphBuilder b;
  GadgetMeta m;
  m.kind = GadgetKind::S;
  m.k = k;
  Vertex first = b.add_vertices(k + 1);
  for (int j = 0; j <= k; ++j) m.v.push_back(first + j);
  b.add_clique(m.v);
  m.rank.resize(static_cast<std::size_t>(k + 1));
  std::iota(m.rank.begin(), m.rank.end(), 0);
  std::vector<std::vector<Vertex>> kj(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    for (int t = 1; t <= k - j; ++t) {
      kj[j].push_back(b.add_vertex());
      m.rank.push_back(j + t);
    }
    b.add_clique(kj[j]);
  }
  for (int j = 0; j < k; ++j)
    for (int l = j; l < k; ++l)
      for (Vertex x : kj[l]) b.add_edge(m.v[j], x);
  m.size = b.n();
  return {b.build(), m};
}

/// F(i,k): S(k) plus a head adjacent to v_1..v_{i-1}.
inline Gadget gen_F(int i, int k) {
  if (i < 2 || i > k) fail(ErrorKind::BadParams, "F(i,k) needs 2 <= i <= k");
  Gadget s = gen_S(k);
  GraphBuilder b;
  b.append(s.graph);
  GadgetMeta m = s.meta;
  m.kind = GadgetKind::F;
  m.i = i;
  m.head = b.add_vertex();
  for (int j = 1; j < i; ++j) b.add_edge(m.v[j], m.head);
  m.size = b.n();
  return {b.build(), m};
}

/// Z(k'): two k'-cliques sharing exactly one vertex s(Z) = 0.
inline Gadget gen_Z(int kp) {
  if (kp < 2) fail(ErrorKind::BadParams, "Z(k') needs k' >= 2");
  GraphBuilder b(2 * kp - 1);
  std::vector<Vertex> a, c{0};
  for (int x = 0; x < kp; ++x) a.push_back(x);
  for (int x = kp; x < 2 * kp - 1; ++x) c.push_back(x);
  b.add_clique(a);
  b.add_clique(c);
  GadgetMeta m;
  m.kind = GadgetKind::Z;
  m.k = kp;
  m.s = 0;
  m.size = b.n();
  return {b.build(), m};
}

/// Canonical proper orientation of a gadget's interior: S vertices by rank,
/// v_1..v_{i-1} into the head, s(Z) a source with each Z clique transitive.
/// Ids are shifted by meta.offset.
inline void orient_gadget(PartialOrientation& d, const GadgetMeta& m) {
  const Vertex o = m.offset;
  if (m.kind == GadgetKind::Z) {
    const int kp = m.k;
    std::vector<Vertex> a, c{o};
    for (int x = 0; x < kp; ++x) a.push_back(o + x);
    for (int x = kp; x < 2 * kp - 1; ++x) c.push_back(o + x);
    orient_transitive(d, a);
    orient_transitive(d, c);
    return;
  }
  const Graph& g = d.graph();
  const int sn = static_cast<int>(m.rank.size());
  for (int x = 0; x < sn; ++x)
    for (Vertex y : g.neighbors(o + x)) {
      int ly = y - o;
      if (ly <= x || ly >= sn) continue;
      // Ranks of adjacent S vertices always differ.
      if (m.rank[x] < m.rank[ly])
        d.orient(o + x, y);
      else
        d.orient(y, o + x);
    }
  if (m.kind == GadgetKind::F)
    for (int j = 1; j < m.i; ++j) d.orient(o + m.v[j], o + m.head);
}

// ----------------------------------------------------------------- reduction

struct ReductionOutput {
  Graph graph;
  int k = 0;        // cover size asked for
  int k_prime = 0;  // |V(G_in)| + 2
  Graph input;
  std::vector<Vertex> clique;       // K: vertex x of the input is clique[x]
  std::vector<Vertex> independent;  // I: input edge e is independent[e]
  std::vector<GadgetMeta> gadgets;  // offsets and hosts filled in
};

/// Chordal instance (G', k') with proper orientation number at most k' exactly
/// when the cubic graph G has a vertex cover of size at most k.
inline ReductionOutput reduce_vertex_cover(const Graph& g, int k) {
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) != 3) fail(ErrorKind::NotCubic, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
  if (g.n() == 0) fail(ErrorKind::NotCubic, "empty graph");
  // F(k-1, k') needs k-1 >= 2.
  if (k < 3 || k > g.n()) fail(ErrorKind::BadK, "k must lie in [3, |V|], got " + std::to_string(k));
  ReductionOutput r;
  r.k = k;
  r.k_prime = g.n() + 2;
  r.input = g;
  GraphBuilder b;
  for (Vertex v = 0; v < g.n(); ++v) r.clique.push_back(b.add_vertex());
  b.add_clique(r.clique);
  for (const Edge& e : g.edges()) {
    Vertex x = b.add_vertex();
    r.independent.push_back(x);
    b.add_edge(x, r.clique[e.lo]);
    b.add_edge(x, r.clique[e.hi]);
  }
  auto hang = [&](Gadget gd, Vertex host, bool via_head) {
    Vertex off = b.append(gd.graph);
    gd.meta.offset = off;
    gd.meta.host = host;
    b.add_edge(host, off + (via_head ? gd.meta.head : gd.meta.s));
    r.gadgets.push_back(gd.meta);
  };
  const int kp = r.k_prime;
  for (Vertex x : r.clique) {
    hang(gen_F(k, kp), x, true);
    hang(gen_F(k + 1, kp), x, true);
  }
  for (Vertex x : r.independent) {
    hang(gen_F(k - 1, kp), x, true);
    for (int c = 0; c < k - 1; ++c) hang(gen_Z(kp), x, false);
  }
  r.graph = b.build();
  return r;
}

/// Proper k'-orientation of G' built from a vertex cover of the input graph.
inline Orientation build_vc_certificate(const ReductionOutput& r, std::vector<Vertex> cover) {
  const Graph& g = r.input;
  std::vector<char> in_s(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : cover) {
    if (!g.contains(v)) fail(ErrorKind::NotACover, "vertex " + std::to_string(v) + " not in the input graph");
    in_s[v] = 1;
  }
  for (const Edge& e : g.edges())
    if (!in_s[e.lo] && !in_s[e.hi])
      fail(ErrorKind::NotACover, "edge " + std::to_string(e.lo) + " " + std::to_string(e.hi) + " is not covered");
  int size = static_cast<int>(std::count(in_s.begin(), in_s.end(), 1));
  if (size > r.k) fail(ErrorKind::NotACover, "cover has more than k vertices");
  for (Vertex v = 0; v < g.n() && size < r.k; ++v)
    if (!in_s[v]) in_s[v] = 1, ++size;

  PartialOrientation d(r.graph);
  for (const auto& m : r.gadgets) {
    orient_gadget(d, m);
    if (m.kind == GadgetKind::Z)
      d.orient(m.offset + m.s, m.host);
    else
      d.orient(m.host, m.offset + m.head);
  }
  std::vector<Vertex> s_part, rest;
  for (Vertex v = 0; v < g.n(); ++v) (in_s[v] ? s_part : rest).push_back(r.clique[v]);
  orient_transitive(d, s_part);
  orient_transitive(d, rest);
  for (Vertex a : s_part) {
    for (Vertex c : rest) d.orient(a, c);
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    Vertex x = r.independent[e];
    for (Vertex end : {g.edge(e).lo, g.edge(e).hi}) {
      if (in_s[end])
        d.orient(r.clique[end], x);
      else
        d.orient(x, r.clique[end]);
    }
  }
  return d.to_orientation();
}

// ------------------------------------------------------------------- kernels

struct KernelResult {
  Graph graph;
  int k = 0;
  bool trivial_no = false;  // output replaced by K_{k+2}
  std::vector<Vertex> kept;  // original ids of the kept vertices (empty when trivial_no)
};

/// Twin classes of the independent side are cut down to M+1 vertices,
/// M = k omega - omega(omega-1)/2.
inline KernelResult split_kernel(const Graph& g, int k) {
  if (k < 0) fail(ErrorKind::BadK, "k must be non-negative");
  auto part = split_partition(g);
  if (!part) fail(ErrorKind::NotSplit, "graph is not split");
  const long long omega = static_cast<long long>(part->clique.size());
  KernelResult out;
  out.k = k;
  if (omega >= k + 2) {
    out.graph = complete_graph(k + 2);
    out.trivial_no = true;
    return out;
  }
  const long long m_cap = k * omega - omega * (omega - 1) / 2;
  std::vector<Vertex> keep(part->clique.begin(), part->clique.end());
  for (const auto& cls : twin_partition(g, part->independent)) {
    long long take = std::min<long long>(static_cast<long long>(cls.size()), m_cap + 1);
    keep.insert(keep.end(), cls.begin(), cls.begin() + take);
  }
  auto sub = induced_subgraph(g, keep);
  out.graph = sub.graph;
  out.kept = sub.to_parent;
  return out;
}

namespace detail {

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.n()), -1);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> q{s};
    for (std::size_t h = 0; h < q.size(); ++h)
      for (Vertex w : g.neighbors(q[h])) {
        if (side[w] < 0) side[w] = 1 - side[q[h]], q.push_back(w);
        else if (side[w] == side[q[h]]) return false;
      }
  }
  return true;
}

}  // namespace detail

/// Either K_{k+2} (omega too large) or G itself, which then has at most 2(k+1) vertices.
inline KernelResult cobipartite_kernel(const Graph& g, int k) {
  if (k < 0) fail(ErrorKind::BadK, "k must be non-negative");
  if (!detail::is_bipartite(complement(g))) fail(ErrorKind::NotCobipartite, "complement is not bipartite");
  KernelResult out;
  out.k = k;
  // Two cliques cover V, so n > 2(k+1) already forces omega >= k+2.
  if (g.n() > 2 * (k + 1) || clique_number(g) >= k + 2) {
    out.graph = complete_graph(k + 2);
    out.trivial_no = true;
    return out;
  }
  out.graph = g;
  out.kept.resize(static_cast<std::size_t>(g.n()));
  std::iota(out.kept.begin(), out.kept.end(), 0);
  return out;
}

// ------------------------------------------------------------ tight examples

/// Clique K_omega plus, for every j in [1, omega-1], omega(omega-1) copies of
/// an independent set with one vertex per j-subset of the clique.
inline Graph gen_split_tight(int omega) {
  if (omega < 2) fail(ErrorKind::BadParams, "omega must be at least 2");
  GraphBuilder b(omega);
  std::vector<Vertex> k(static_cast<std::size_t>(omega));
  std::iota(k.begin(), k.end(), 0);
  b.add_clique(k);
  for (int j = 1; j < omega; ++j)
    for (int copy = 0; copy < omega * (omega - 1); ++copy) {
      std::vector<char> pick(static_cast<std::size_t>(omega), 0);
      std::fill(pick.end() - j, pick.end(), 1);
      do {
        Vertex x = b.add_vertex();
        for (int t = 0; t < omega; ++t)
          if (pick[t]) b.add_edge(x, t);
      } while (std::next_permutation(pick.begin(), pick.end()));
    }
  return b.build();
}

/// G(k): base K_k with u = 0 and v = 1; on each of them k+1 pendant k-cliques
/// K_0..K_k, and on one fresh vertex of each of K_1..K_k a further pendant k-clique.
inline Graph gen_block_tight(int k) {
  if (k < 2) fail(ErrorKind::BadParams, "k must be at least 2");
  GraphBuilder b(k);
  std::vector<Vertex> base(static_cast<std::size_t>(k));
  std::iota(base.begin(), base.end(), 0);
  b.add_clique(base);
  auto pendant = [&](Vertex at) {
    std::vector<Vertex> cl{at};
    Vertex first = b.add_vertices(k - 1);
    for (int t = 0; t < k - 1; ++t) cl.push_back(first + t);
    b.add_clique(cl);
    return first;
  };
  for (Vertex w : {0, 1})
    for (int i = 0; i <= k; ++i) {
      Vertex wi = pendant(w);
      if (i >= 1) pendant(wi);
    }
  return b.build();
}

// ------------------------------------------------------- random class instances

enum class RandomClass { Split, QuasiThreshold, UniformBlock, TwoCutBlock, Strip, Cograph, LowDegreeTree, Gnm };

inline RandomClass parse_random_class(const std::string& s) {
  static const std::map<std::string, RandomClass> names{
      {"split", RandomClass::Split},           {"quasi-threshold", RandomClass::QuasiThreshold},
      {"uniform-block", RandomClass::UniformBlock}, {"two-cut-block", RandomClass::TwoCutBlock},
      {"strip", RandomClass::Strip},           {"cograph", RandomClass::Cograph},
      {"low-degree-tree", RandomClass::LowDegreeTree}, {"gnm", RandomClass::Gnm}};
  auto it = names.find(s);
  if (it == names.end()) fail(ErrorKind::BadParams, "unknown class '" + s + "'");
  return it->second;
}

/// `size` means vertices for split, quasi-threshold, cograph, trees and gnm;
/// blocks for the block classes; triangles for strips.
struct RandomParams {
  int size = 10;
  int k = 3;               // block size
  int c = 2;               // low-degree trees: no two adjacent vertices of degree > c
  double fan_bias = 0.6;   // strips: chance of keeping the fan pivot
  double density = 0.5;    // split / gnm edge probability
};

namespace detail {

/// Uniform integer in [0, n) that does not depend on the standard library's
/// distribution implementation.
inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t lim = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = rng();
  while (x >= lim);
  return x % n;
}

inline int pick(std::mt19937_64& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline bool coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

inline Graph relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.n()));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[below(rng, i)]);
  GraphBuilder b(g.n());
  for (const Edge& e : g.edges()) b.add_edge(perm[e.lo], perm[e.hi]);
  return b.build();
}

inline Graph random_split(int n, double p, std::mt19937_64& rng) {
  int omega = n == 0 ? 0 : pick(rng, 1, std::max(1, n / 2));
  GraphBuilder b(n);
  std::vector<Vertex> k(static_cast<std::size_t>(omega));
  std::iota(k.begin(), k.end(), 0);
  b.add_clique(k);
  for (Vertex x = omega; x < n; ++x)
    for (Vertex y = 0; y < omega; ++y)
      if (coin(rng, p)) b.add_edge(x, y);
  return relabel(b.build(), rng);
}

inline Graph random_quasi_threshold(int n, std::mt19937_64& rng) {
  // Comparability graph of a random rooted forest.
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) {
    parent[v] = pick(rng, -1, v - 1);
    for (Vertex a = parent[v]; a >= 0; a = parent[a]) b.add_edge(v, a);
  }
  return relabel(b.build(), rng);
}

inline Graph random_block(int blocks, int k, bool two_cut, std::mt19937_64& rng) {
  GraphBuilder b(k);
  std::vector<std::vector<Vertex>> members{{}};
  for (Vertex v = 0; v < k; ++v) members[0].push_back(v);
  b.add_clique(members[0]);
  std::vector<std::vector<int>> blocks_of(static_cast<std::size_t>(k), std::vector<int>{0});
  std::vector<int> cuts_in_block{0};
  for (int t = 1; t < blocks; ++t) {
    std::vector<Vertex> ok;
    const int n = b.n();
    for (Vertex v = 0; v < n; ++v) {
      bool is_cut = blocks_of[v].size() >= 2;
      if (!two_cut || is_cut || cuts_in_block[blocks_of[v][0]] < 2) ok.push_back(v);
    }
    // Bias towards existing cut vertices to grow high-degree hubs.
    std::vector<Vertex> hubs;
    for (Vertex v : ok)
      if (blocks_of[v].size() >= 2) hubs.push_back(v);
    Vertex at = (!hubs.empty() && coin(rng, 0.35)) ? hubs[below(rng, hubs.size())] : ok[below(rng, ok.size())];
    if (blocks_of[at].size() == 1) ++cuts_in_block[blocks_of[at][0]];
    int id = static_cast<int>(members.size());
    std::vector<Vertex> cl{at};
    Vertex first = b.add_vertices(k - 1);
    for (int i = 0; i < k - 1; ++i) cl.push_back(first + i), blocks_of.push_back({id});
    b.add_clique(cl);
    blocks_of[at].push_back(id);
    members.push_back(cl);
    cuts_in_block.push_back(1);
  }
  return b.build();
}

inline Graph random_strip(int triangles, double fan_bias, std::mt19937_64& rng) {
  if (triangles <= 0) return complete_graph(2);
  GraphBuilder b(3);
  b.add_edge(0, 1), b.add_edge(0, 2), b.add_edge(1, 2);
  Vertex pivot = 0, newest = 2;
  for (int t = 1; t < triangles; ++t) {
    Vertex z = b.add_vertex();
    b.add_edge(pivot, z);
    b.add_edge(newest, z);
    if (!coin(rng, fan_bias)) pivot = newest;
    newest = z;
  }
  return relabel(b.build(), rng);
}

inline Graph random_cograph(int n, std::mt19937_64& rng) {
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  GraphBuilder b(n);
  auto rec = [&](auto&& self, std::vector<Vertex> vs, bool join_level) -> void {
    if (vs.size() <= 1) return;
    std::size_t cut = 1 + below(rng, vs.size() - 1);
    std::vector<Vertex> a(vs.begin(), vs.begin() + static_cast<long>(cut)), c(vs.begin() + static_cast<long>(cut), vs.end());
    if (join_level)
      for (Vertex x : a)
        for (Vertex y : c) b.add_edge(x, y);
    bool flip = coin(rng, 0.8);
    self(self, a, flip ? !join_level : join_level);
    self(self, c, flip ? !join_level : join_level);
  };
  rec(rec, all, coin(rng, 0.5));
  return relabel(b.build(), rng);
}

inline Graph random_low_degree_tree(int n, int c, std::mt19937_64& rng) {
  GraphBuilder b(n);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  auto high = [&](Vertex v) { return deg[v] >= c + 1; };
  for (Vertex v = 1; v < n; ++v) {
    std::vector<Vertex> ok;
    for (Vertex p = 0; p < v; ++p) {
      bool would_be_high = deg[p] + 1 >= c + 1;
      bool clash = would_be_high && std::any_of(adj[p].begin(), adj[p].end(), high);
      if (!clash) ok.push_back(p);
    }
    // Prefer hubs so that high-degree vertices actually appear.
    std::vector<Vertex> hubs;
    for (Vertex p : ok)
      if (deg[p] >= 2) hubs.push_back(p);
    Vertex p = (!hubs.empty() && coin(rng, 0.5)) ? hubs[below(rng, hubs.size())] : ok[below(rng, ok.size())];
    b.add_edge(p, v);
    ++deg[p], ++deg[v];
    adj[p].push_back(v), adj[v].push_back(p);
  }
  return relabel(b.build(), rng);
}

inline Graph random_gnm(int n, double p, std::mt19937_64& rng) {
  GraphBuilder b(n);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (coin(rng, p)) b.add_edge(x, y);
  return b.build();
}

}  // namespace detail

/// Seeded generator; the same (class, params, seed) always gives the same graph.
inline Graph random_class_instance(RandomClass cls, const RandomParams& p, std::uint64_t seed) {
  if (p.size < 0) fail(ErrorKind::BadParams, "size must be non-negative");
  std::mt19937_64 rng(seed);
  switch (cls) {
    case RandomClass::Split: return detail::random_split(p.size, p.density, rng);
    case RandomClass::QuasiThreshold: return detail::random_quasi_threshold(p.size, rng);
    case RandomClass::UniformBlock:
    case RandomClass::TwoCutBlock:
      if (p.k < 2 || p.size < 1) fail(ErrorKind::BadParams, "block classes need k >= 2 and at least one block");
      return detail::random_block(p.size, p.k, cls == RandomClass::TwoCutBlock, rng);
    case RandomClass::Strip: return detail::random_strip(p.size, p.fan_bias, rng);
    case RandomClass::Cograph: return detail::random_cograph(p.size, rng);
    case RandomClass::LowDegreeTree:
      if (p.c < 1) fail(ErrorKind::BadParams, "c must be positive");
      return detail::random_low_degree_tree(p.size, p.c, rng);
    case RandomClass::Gnm: return detail::random_gnm(p.size, p.density, rng);
  }
  fail(ErrorKind::BadParams, "unknown class");
}

inline Graph random_class_instance(const std::string& cls, const RandomParams& p, std::uint64_t seed) {
  return random_class_instance(parse_random_class(cls), p, seed);
}

}  // namespace orientkit
