#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "orientkit/error.hpp"
#include "orientkit/graph.hpp"

namespace orientkit {

// ---------------------------------------------------------------- chordality

/// Lexicographic BFS visit order (partition refinement, O(n^2) worst case).
/// Ties resolve toward the smaller vertex id.
inline std::vector<Vertex> lex_bfs(const Graph& g) {
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(g.n()));
  std::vector<std::vector<Vertex>> classes;
  if (g.n() > 0) {
    classes.emplace_back();
    for (Vertex v = 0; v < g.n(); ++v) classes.back().push_back(v);
  }
  std::vector<char> mark(static_cast<std::size_t>(g.n()), 0);
  while (!classes.empty()) {
    Vertex v = classes.front().front();
    classes.front().erase(classes.front().begin());
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) mark[w] = 1;
    std::vector<std::vector<Vertex>> next;
    next.reserve(classes.size() * 2);
    for (auto& cls : classes) {
      std::vector<Vertex> in, out;
      for (Vertex w : cls) (mark[w] ? in : out).push_back(w);
      if (!in.empty()) next.push_back(std::move(in));
      if (!out.empty()) next.push_back(std::move(out));
    }
    for (Vertex w : g.neighbors(v)) mark[w] = 0;
    classes = std::move(next);
  }
  return order;
}

/// Checks that `order` eliminates simplicial vertices front to back:
/// the later neighbors of each vertex form a clique.
inline bool is_peo(const Graph& g, std::span<const Vertex> order) {
  if (order.size() != static_cast<std::size_t>(g.n())) return false;
  std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    if (!g.contains(v) || pos[v] >= 0) return false;
    pos[v] = static_cast<int>(i);
  }
  for (Vertex v : order) {
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v] && (parent < 0 || pos[w] < pos[parent])) parent = w;
    if (parent < 0) continue;
    for (Vertex w : g.neighbors(v))
      if (w != parent && pos[w] > pos[v] && !g.adjacent(parent, w)) return false;
  }
  return true;
}

/// Shortest chordless cycle through some vertex v and two non-adjacent
/// neighbours p, w of v, searched in G - (N[v] \ {p, w}). Empty if chordal.
inline std::vector<Vertex> find_chordless_cycle(const Graph& g, std::span<const Vertex> first_try = {}) {
  std::vector<Vertex> candidates(first_try.begin(), first_try.end());
  for (Vertex v = 0; v < g.n(); ++v) candidates.push_back(v);
  std::vector<int> blocked(static_cast<std::size_t>(g.n()), -1);
  std::vector<Vertex> prev(static_cast<std::size_t>(g.n()), -1);
  int stamp = 0;
  for (Vertex v : candidates) {
    auto nv = g.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i) {
      for (std::size_t j = i + 1; j < nv.size(); ++j) {
        Vertex p = nv[i], w = nv[j];
        if (g.adjacent(p, w)) continue;
        ++stamp;
        blocked[v] = stamp;
        for (Vertex x : nv)
          if (x != p && x != w) blocked[x] = stamp;
        // BFS p -> w; `blocked` doubles as the visited marker (stamp + n offset).
        std::queue<Vertex> q;
        q.push(p);
        blocked[p] = stamp;
        prev[p] = -1;
        bool found = false;
        while (!q.empty() && !found) {
          Vertex x = q.front();
          q.pop();
          for (Vertex y : g.neighbors(x)) {
            if (blocked[y] == stamp) continue;
            blocked[y] = stamp;
            prev[y] = x;
            if (y == w) {
              found = true;
              break;
            }
            q.push(y);
          }
        }
        if (!found) continue;
        std::vector<Vertex> cycle{v};
        std::vector<Vertex> path;
        for (Vertex x = w; x >= 0; x = prev[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  return {};
}

struct ChordalResult {
  bool chordal = false;
  std::vector<Vertex> peo;    // when chordal: simplicial elimination order
  std::vector<Vertex> cycle;  // otherwise: a chordless cycle, length >= 4

  explicit operator bool() const noexcept { return chordal; }
};

inline ChordalResult chordal_peo(const Graph& g) {
  auto order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  ChordalResult r;
  if (is_peo(g, order)) {
    r.chordal = true;
    r.peo = std::move(order);
    return r;
  }
  r.cycle = find_chordless_cycle(g);
  return r;
}

inline bool is_chordal(const Graph& g) { return chordal_peo(g).chordal; }

/// Largest clique read off a perfect elimination ordering.
inline std::vector<Vertex> max_clique_chordal(const Graph& g, std::span<const Vertex> peo) {
  if (!is_peo(g, peo)) fail(ErrorKind::PreconditionViolated, "ordering is not a perfect elimination ordering");
  std::vector<int> pos(static_cast<std::size_t>(g.n()));
  for (std::size_t i = 0; i < peo.size(); ++i) pos[peo[i]] = static_cast<int>(i);
  std::vector<Vertex> best;
  for (Vertex v : peo) {
    std::vector<Vertex> c{v};
    for (Vertex w : g.neighbors(v))
      if (pos[w] > pos[v]) c.push_back(w);
    if (c.size() > best.size()) best = std::move(c);
  }
  std::sort(best.begin(), best.end());
  return best;
}

inline int clique_number_chordal(const Graph& g, std::span<const Vertex> peo) {
  return static_cast<int>(max_clique_chordal(g, peo).size());
}

/// Exact maximum clique by Bron-Kerbosch with Tomita pivoting.
inline std::vector<Vertex> max_clique(const Graph& g) {
  if (auto c = chordal_peo(g)) return max_clique_chordal(g, c.peo);
  std::vector<Vertex> best, cur;
  auto rec = [&](auto&& self, std::vector<Vertex> p, std::vector<Vertex> x) -> void {
    if (p.empty()) {
      if (x.empty() && cur.size() > best.size()) best = cur;
      return;
    }
    if (cur.size() + p.size() <= best.size()) return;
    Vertex pivot = p.front();
    std::size_t most = 0;
    for (const auto* s : {&p, &x})
      for (Vertex u : *s) {
        std::size_t cnt = 0;
        for (Vertex w : p) cnt += g.adjacent(u, w);
        if (cnt >= most) most = cnt, pivot = u;
      }
    std::vector<Vertex> cand;
    for (Vertex v : p)
      if (!g.adjacent(pivot, v)) cand.push_back(v);
    for (Vertex v : cand) {
      std::vector<Vertex> np, nx;
      for (Vertex w : p)
        if (g.adjacent(v, w)) np.push_back(w);
      for (Vertex w : x)
        if (g.adjacent(v, w)) nx.push_back(w);
      cur.push_back(v);
      self(self, std::move(np), std::move(nx));
      cur.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  std::vector<Vertex> all(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
  rec(rec, all, {});
  std::sort(best.begin(), best.end());
  return best;
}

inline int clique_number(const Graph& g) { return static_cast<int>(max_clique(g).size()); }

// --------------------------------------------------------------------- split

struct SplitPartition {
  std::vector<Vertex> clique;       // K, sorted, maximal
  std::vector<Vertex> independent;  // I, sorted
};

inline bool is_valid_split_partition(const Graph& g, const SplitPartition& p) {
  if (p.clique.size() + p.independent.size() != static_cast<std::size_t>(g.n())) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (const auto* s : {&p.clique, &p.independent})
    for (Vertex v : *s) {
      if (!g.contains(v) || seen[v]) return false;
      seen[v] = 1;
    }
  if (!is_clique(g, p.clique) || !is_independent(g, p.independent)) return false;
  for (Vertex v : p.independent)
    if (g.degree(v) == static_cast<int>(p.clique.size()) && !p.clique.empty()) return false;
  return true;
}

/// Degree-sequence split test; K is then enlarged to a maximal clique.
inline std::optional<SplitPartition> split_partition(const Graph& g) {
  const int n = g.n();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  int mm = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(order[i]) >= i) mm = i + 1;
  long long head = 0, tail = 0;
  for (int i = 0; i < n; ++i) (i < mm ? head : tail) += g.degree(order[i]);
  if (head != static_cast<long long>(mm) * (mm - 1) + tail) return std::nullopt;
  SplitPartition p;
  p.clique.assign(order.begin(), order.begin() + mm);
  p.independent.assign(order.begin() + mm, order.end());
  std::sort(p.clique.begin(), p.clique.end());
  std::sort(p.independent.begin(), p.independent.end());
  for (auto it = p.independent.begin(); it != p.independent.end(); ++it) {
    if (g.degree(*it) == static_cast<int>(p.clique.size())) {
      p.clique.insert(std::lower_bound(p.clique.begin(), p.clique.end(), *it), *it);
      p.independent.erase(it);
      break;  // I is independent, so at most one vertex can move
    }
  }
  if (!is_valid_split_partition(g, p)) return std::nullopt;
  return p;
}

// -------------------------------------------------------------------- cotree

struct CotreeNode {
  enum class Kind { Leaf, Union, Join };
  Kind kind = Kind::Leaf;
  Vertex vertex = -1;         // leaves only
  std::vector<int> children;  // node indices
};

/// Union/join decomposition tree. Leaves carry the graph's vertex ids.
struct Cotree {
  int n = 0;
  int root = -1;
  std::vector<CotreeNode> nodes;

  const CotreeNode& node(int i) const { return nodes[static_cast<std::size_t>(i)]; }

  /// Vertices below node i, sorted.
  std::vector<Vertex> leaves(int i) const {
    std::vector<Vertex> out;
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      const auto& nd = node(x);
      if (nd.kind == CotreeNode::Kind::Leaf)
        out.push_back(nd.vertex);
      else
        for (int c : nd.children) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Graph evaluate() const {
    GraphBuilder b(n);
    if (root < 0) return b.build();
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      const auto& nd = node(x);
      if (nd.kind == CotreeNode::Kind::Join) {
        std::vector<std::vector<Vertex>> parts;
        for (int c : nd.children) parts.push_back(leaves(c));
        for (std::size_t i = 0; i < parts.size(); ++i)
          for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (Vertex a : parts[i])
              for (Vertex c : parts[j]) b.add_edge(a, c);
      }
      for (int c : nd.children) stack.push_back(c);
    }
    return b.build();
  }

  int add(CotreeNode nd) {
    nodes.push_back(std::move(nd));
    return static_cast<int>(nodes.size()) - 1;
  }
};

namespace detail {

// Components of G[set] (or of its complement); each sorted, listed by smallest member.
inline std::vector<std::vector<Vertex>> components_within(const Graph& g, const std::vector<Vertex>& set,
                                                          bool complement_graph) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0), seen(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : set) in[v] = 1;
  std::vector<Vertex> unvisited = set;
  for (Vertex s : set) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t h = 0; h < comp.size(); ++h) {
      Vertex x = comp[h];
      if (!complement_graph) {
        for (Vertex y : g.neighbors(x))
          if (in[y] && !seen[y]) seen[y] = 1, comp.push_back(y);
      } else {
        for (Vertex y : set)
          if (!seen[y] && y != x && !g.adjacent(x, y)) seen[y] = 1, comp.push_back(y);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace detail

/// Cotree whose joins always have a single vertex as their first child.
/// nullopt when some connected induced piece lacks a universal vertex.
inline std::optional<Cotree> quasi_threshold_cotree(const Graph& g) {
  Cotree t;
  t.n = g.n();
  if (g.n() == 0) return t;
  bool ok = true;
  auto build = [&](auto&& self, const std::vector<Vertex>& set) -> int {
    if (!ok) return -1;
    if (set.size() == 1) return t.add({CotreeNode::Kind::Leaf, set[0], {}});
    auto comps = detail::components_within(g, set, false);
    if (comps.size() > 1) {
      CotreeNode u{CotreeNode::Kind::Union, -1, {}};
      for (const auto& c : comps) u.children.push_back(self(self, c));
      return t.add(std::move(u));
    }
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : set) in[v] = 1;
    Vertex uni = -1;
    for (Vertex v : set) {
      int d = 0;
      for (Vertex w : g.neighbors(v)) d += in[w];
      if (d + 1 == static_cast<int>(set.size())) {
        uni = v;
        break;
      }
    }
    if (uni < 0) {
      ok = false;
      return -1;
    }
    std::vector<Vertex> rest;
    for (Vertex v : set)
      if (v != uni) rest.push_back(v);
    int leaf = t.add({CotreeNode::Kind::Leaf, uni, {}});
    int sub = self(self, rest);
    return t.add({CotreeNode::Kind::Join, -1, {leaf, sub}});
  };
  std::vector<Vertex> all(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
  t.root = build(build, all);
  if (!ok) return std::nullopt;
  return t;
}

/// An induced path a-b-c-d, empty if none exists.
inline std::vector<Vertex> find_induced_p4(const Graph& g) {
  for (const Edge& e : g.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      Vertex b = flip ? e.hi : e.lo, c = flip ? e.lo : e.hi;
      for (Vertex a : g.neighbors(b)) {
        if (a == c || g.adjacent(a, c)) continue;
        for (Vertex d : g.neighbors(c)) {
          if (d == b || d == a || g.adjacent(d, b) || g.adjacent(d, a)) continue;
          return {a, b, c, d};
        }
      }
    }
  }
  return {};
}

struct CographResult {
  std::optional<Cotree> cotree;
  std::vector<Vertex> p4;  // witness when not a cograph

  explicit operator bool() const noexcept { return cotree.has_value(); }
};

inline CographResult cograph_cotree(const Graph& g) {
  CographResult r;
  Cotree t;
  t.n = g.n();
  bool ok = true;
  std::vector<Vertex> bad_set;
  auto build = [&](auto&& self, const std::vector<Vertex>& set) -> int {
    if (!ok) return -1;
    if (set.size() == 1) return t.add({CotreeNode::Kind::Leaf, set[0], {}});
    auto comps = detail::components_within(g, set, false);
    CotreeNode::Kind kind = CotreeNode::Kind::Union;
    if (comps.size() == 1) {
      comps = detail::components_within(g, set, true);
      kind = CotreeNode::Kind::Join;
      if (comps.size() == 1) {
        ok = false;
        bad_set = set;
        return -1;
      }
    }
    CotreeNode nd{kind, -1, {}};
    for (const auto& c : comps) nd.children.push_back(self(self, c));
    return t.add(std::move(nd));
  };
  if (g.n() > 0) {
    std::vector<Vertex> all(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
    t.root = build(build, all);
  }
  if (ok) {
    r.cotree = std::move(t);
    return r;
  }
  auto sub = induced_subgraph(g, bad_set);
  for (Vertex v : find_induced_p4(sub.graph)) r.p4.push_back(sub.to_parent[v]);
  return r;
}

// ----------------------------------------------------------- local structure

inline bool is_claw_free(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    auto nv = g.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i)
      for (std::size_t j = i + 1; j < nv.size(); ++j) {
        if (g.adjacent(nv[i], nv[j])) continue;
        for (std::size_t l = j + 1; l < nv.size(); ++l)
          if (!g.adjacent(nv[i], nv[l]) && !g.adjacent(nv[j], nv[l])) return false;
      }
  }
  return true;
}

/// Classes of S with identical neighbourhoods, each sorted, ordered by first member.
inline std::vector<std::vector<Vertex>> twin_partition(const Graph& g, std::span<const Vertex> s) {
  if (!is_independent(g, s)) fail(ErrorKind::PreconditionViolated, "twin_partition expects an independent set");
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_nbhd;
  std::vector<Vertex> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v : sorted) {
    auto nb = g.neighbors(v);
    by_nbhd[std::vector<Vertex>(nb.begin(), nb.end())].push_back(v);
  }
  std::vector<std::vector<Vertex>> out;
  for (auto& [nb, cls] : by_nbhd) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------ block-cut tree

struct BlockCutTree {
  std::vector<std::vector<Vertex>> blocks;   // sorted vertex sets
  std::vector<int> block_edges;              // edges inside each block
  std::vector<Vertex> cut_vertices;          // sorted
  std::vector<char> is_cut;                  // per vertex
  std::vector<std::vector<int>> vertex_blocks;  // blocks containing each vertex

  int block_count() const { return static_cast<int>(blocks.size()); }

  /// Cut vertices lying in block b, sorted.
  std::vector<Vertex> cuts_of(int b) const {
    std::vector<Vertex> out;
    for (Vertex v : blocks[b])
      if (is_cut[v]) out.push_back(v);
    return out;
  }
};

/// Biconnected components (iterative Hopcroft-Tarjan). Isolated vertices form
/// singleton blocks. Blocks are numbered by their smallest edge.
inline BlockCutTree block_cut_tree(const Graph& g) {
  const int n = g.n();
  BlockCutTree t;
  t.is_cut.assign(static_cast<std::size_t>(n), 0);
  t.vertex_blocks.assign(static_cast<std::size_t>(n), {});
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> estack;
  std::vector<std::vector<EdgeId>> block_edge_lists;
  int timer = 0;
  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    if (g.degree(s) == 0) {
      disc[s] = timer++;
      block_edge_lists.push_back({});
      t.blocks.push_back({s});
      continue;
    }
    std::vector<Frame> st{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    int root_children = 0;
    while (!st.empty()) {
      Frame& f = st.back();
      auto inc = g.incident_edges(f.v);
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        std::size_t i = f.next++;
        Vertex w = nb[i];
        EdgeId e = inc[i];
        if (e == f.via) continue;
        if (disc[w] < 0) {
          estack.push_back(e);
          disc[w] = low[w] = timer++;
          if (f.v == s) ++root_children;
          st.push_back({w, e, 0});
        } else if (disc[w] < disc[f.v]) {
          estack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      st.pop_back();
      if (st.empty()) break;
      Vertex p = st.back().v;
      low[p] = std::min(low[p], low[done.v]);
      if (low[done.v] >= disc[p]) {
        if (p != s) t.is_cut[p] = 1;
        std::vector<EdgeId> blk;
        while (true) {
          EdgeId e = estack.back();
          estack.pop_back();
          blk.push_back(e);
          if (e == done.via) break;
        }
        std::vector<Vertex> vs;
        for (EdgeId e : blk) vs.push_back(g.edge(e).lo), vs.push_back(g.edge(e).hi);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        block_edge_lists.push_back(std::move(blk));
        t.blocks.push_back(std::move(vs));
      }
    }
    if (root_children > 1) t.is_cut[s] = 1;
  }
  // Canonical numbering by smallest edge id (singletons by their vertex, after edges).
  std::vector<int> idx(t.blocks.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  auto key = [&](int i) {
    const auto& es = block_edge_lists[i];
    return es.empty() ? std::pair<int, int>{1, t.blocks[i][0]}
                      : std::pair<int, int>{0, *std::min_element(es.begin(), es.end())};
  };
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return key(a) < key(b); });
  std::vector<std::vector<Vertex>> blocks;
  for (int i : idx) {
    blocks.push_back(std::move(t.blocks[i]));
    t.block_edges.push_back(static_cast<int>(block_edge_lists[i].size()));
  }
  t.blocks = std::move(blocks);
  for (int b = 0; b < t.block_count(); ++b)
    for (Vertex v : t.blocks[b]) t.vertex_blocks[v].push_back(b);
  for (Vertex v = 0; v < n; ++v)
    if (t.is_cut[v]) t.cut_vertices.push_back(v);
  return t;
}

/// Every block is a clique.
inline bool is_block_graph(const BlockCutTree& t) {
  for (int b = 0; b < t.block_count(); ++b) {
    long long s = static_cast<long long>(t.blocks[b].size());
    if (t.block_edges[b] != s * (s - 1) / 2) return false;
  }
  return true;
}

/// Every block is a clique on exactly k vertices.
inline bool is_k_uniform(const BlockCutTree& t, int k) {
  if (t.blocks.empty()) return false;
  for (const auto& b : t.blocks)
    if (static_cast<int>(b.size()) != k) return false;
  return is_block_graph(t);
}

inline int max_cut_vertices_per_block(const BlockCutTree& t) {
  int best = 0;
  for (int b = 0; b < t.block_count(); ++b) best = std::max(best, static_cast<int>(t.cuts_of(b).size()));
  return best;
}

/// Block-cut tree hung from a root block. Children are ordered by id.
struct RootedBlockTree {
  int root = 0;
  std::vector<Vertex> parent_cut;                // per block, -1 at the root
  std::vector<std::vector<Vertex>> child_cuts;   // per block
  std::vector<int> parent_block;                 // per vertex: block where it is first met, i.e. its parent
  std::vector<std::vector<int>> child_blocks;    // per cut vertex
  std::vector<int> depth;                        // per block
  std::vector<int> bfs_blocks;                   // blocks in BFS order from the root
};

inline RootedBlockTree root_block_tree(const BlockCutTree& t, int root) {
  RootedBlockTree r;
  const int nb = t.block_count();
  const int n = static_cast<int>(t.is_cut.size());
  if (root < 0 || root >= nb) fail(ErrorKind::PreconditionViolated, "root block out of range");
  r.root = root;
  r.parent_cut.assign(static_cast<std::size_t>(nb), -1);
  r.child_cuts.assign(static_cast<std::size_t>(nb), {});
  r.parent_block.assign(static_cast<std::size_t>(n), -1);
  r.child_blocks.assign(static_cast<std::size_t>(n), {});
  r.depth.assign(static_cast<std::size_t>(nb), -1);
  std::vector<int> queue{root};
  r.depth[root] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int b = queue[h];
    for (Vertex v : t.blocks[b]) {
      if (r.parent_block[v] < 0) r.parent_block[v] = b;
      if (!t.is_cut[v] || v == r.parent_cut[b]) continue;
      r.child_cuts[b].push_back(v);
      for (int c : t.vertex_blocks[v]) {
        if (c == b) continue;
        if (r.depth[c] >= 0) fail(ErrorKind::PreconditionViolated, "block-cut structure is not a tree");
        r.depth[c] = r.depth[b] + 1;
        r.parent_cut[c] = v;
        r.child_blocks[v].push_back(c);
        queue.push_back(c);
      }
    }
  }
  if (static_cast<int>(queue.size()) != nb) fail(ErrorKind::PreconditionViolated, "graph is not connected");
  r.bfs_blocks = std::move(queue);
  return r;
}

// --------------------------------------------------------- outerplanar strip

/// A maximal outerplanar graph whose inner faces, ordered along the weak dual,
/// form a path.
struct TriangleStrip {
  std::vector<std::array<Vertex, 3>> triangles;  // each sorted, in path order
  std::vector<Vertex> outer_cycle;               // Hamiltonian boundary walk
};

/// Ear peeling: a 2-tree with no edge in three triangles is maximal outerplanar.
inline std::optional<TriangleStrip> maximal_outerplane_weak_dual(const Graph& g) {
  const int n = g.n();
  if (n < 3 || g.m() != 2 * n - 3 || !is_connected(g)) return std::nullopt;
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<std::array<Vertex, 3>> tris;
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == 2) ready.push(v);
  int left = n;
  while (left > 3) {
    if (ready.empty()) return std::nullopt;
    Vertex v = ready.top();
    ready.pop();
    if (removed[v] || deg[v] != 2) continue;
    std::array<Vertex, 2> nb{};
    int c = 0;
    for (Vertex w : g.neighbors(v))
      if (!removed[w]) nb[c++] = w;
    if (!g.adjacent(nb[0], nb[1])) return std::nullopt;
    std::array<Vertex, 3> tri{v, nb[0], nb[1]};
    std::sort(tri.begin(), tri.end());
    tris.push_back(tri);
    removed[v] = 1;
    --left;
    for (Vertex w : nb)
      if (--deg[w] == 2) ready.push(w);
  }
  std::array<Vertex, 3> last{};
  int c = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) last[c++] = v;
  if (!g.adjacent(last[0], last[1]) || !g.adjacent(last[0], last[2]) || !g.adjacent(last[1], last[2]))
    return std::nullopt;
  tris.push_back(last);

  // Faces per edge; more than two means K_{1,1,3} and hence not outerplanar.
  std::vector<std::vector<int>> faces(static_cast<std::size_t>(g.m()));
  for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
    const auto& t = tris[i];
    for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}}) {
      auto& f = faces[g.edge_id(a, b)];
      f.push_back(i);
      if (f.size() > 2) return std::nullopt;
    }
  }
  const int nt = static_cast<int>(tris.size());
  std::vector<std::vector<int>> dual(static_cast<std::size_t>(nt));
  for (const auto& f : faces)
    if (f.size() == 2) dual[f[0]].push_back(f[1]), dual[f[1]].push_back(f[0]);
  int start = -1;
  for (int i = 0; i < nt; ++i) {
    if (dual[i].size() > 2) return std::nullopt;
    if (dual[i].size() <= 1 && (start < 0 || tris[i] < tris[start])) start = i;
  }
  if (start < 0) return std::nullopt;
  TriangleStrip s;
  std::vector<char> used(static_cast<std::size_t>(nt), 0);
  for (int cur = start, prev = -1; cur >= 0;) {
    s.triangles.push_back(tris[cur]);
    used[cur] = 1;
    int nxt = -1;
    for (int x : dual[cur])
      if (x != prev && !used[x]) nxt = x;
    prev = cur;
    cur = nxt;
  }
  if (static_cast<int>(s.triangles.size()) != nt) return std::nullopt;

  // Boundary edges lie on exactly one face and form the Hamiltonian outer cycle.
  std::vector<std::vector<Vertex>> outer(static_cast<std::size_t>(n));
  for (EdgeId e = 0; e < g.m(); ++e)
    if (faces[e].size() == 1) outer[g.edge(e).lo].push_back(g.edge(e).hi), outer[g.edge(e).hi].push_back(g.edge(e).lo);
  for (const auto& o : outer)
    if (o.size() != 2) return std::nullopt;
  Vertex prev = -1, cur = 0;
  do {
    s.outer_cycle.push_back(cur);
    Vertex nxt = outer[cur][0] != prev ? outer[cur][0] : outer[cur][1];
    prev = cur;
    cur = nxt;
  } while (cur != 0 && static_cast<int>(s.outer_cycle.size()) <= n);
  if (static_cast<int>(s.outer_cycle.size()) != n) return std::nullopt;
  return s;
}

}  // namespace orientkit
