#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orientkit/error.hpp"
#include "orientkit/exact.hpp"
#include "orientkit/extend.hpp"
#include "orientkit/graph.hpp"
#include "orientkit/orientation.hpp"
#include "orientkit/recognizers.hpp"

namespace orientkit {

namespace detail {

inline void copy_arcs(PartialOrientation& d, const Subgraph& sub, const Orientation& local) {
  for (EdgeId e = 0; e < sub.graph.m(); ++e) d.orient(sub.to_parent[local.tail(e)], sub.to_parent[local.head(e)]);
}

inline std::string int_list(std::span<const Vertex> vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

}  // namespace detail

// ----------------------------------------------------------- degree condition

/// Proper c-orientation when no two adjacent vertices both have degree > c:
/// the high-degree vertices become sources and the rest follows the potential rule.
inline Orientation low_degree_orient(const Graph& g, int c) {
  if (c < 1) fail(ErrorKind::BadParams, "c must be positive");
  std::vector<Vertex> high;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) >= c + 1) high.push_back(v);
  for (const Edge& e : g.edges())
    if (g.degree(e.lo) >= c + 1 && g.degree(e.hi) >= c + 1)
      fail(ErrorKind::DegreeConditionViolated, "adjacent vertices " + std::to_string(e.lo) + " and " +
                                                   std::to_string(e.hi) + " both have degree above " +
                                                   std::to_string(c));
  return extend_partial(g, high, {});
}

// ------------------------------------------------------------ quasi-threshold

/// Orientation read off a quasi-threshold cotree: unions side by side, and in
/// v ^ H every edge goes from v into H.
inline Orientation quasi_threshold_orient(const Cotree& t) {
  Graph g = t.evaluate();
  PartialOrientation d(g);
  for (const auto& nd : t.nodes) {
    if (nd.kind != CotreeNode::Kind::Join) continue;
    if (nd.children.size() != 2 || t.node(nd.children[0]).kind != CotreeNode::Kind::Leaf)
      fail(ErrorKind::PreconditionViolated, "join node is not of the form v ^ H");
    Vertex v = t.node(nd.children[0]).vertex;
    for (Vertex w : t.leaves(nd.children[1])) d.orient(v, w);
  }
  return d.to_orientation();
}

// ---------------------------------------------------------------------- split

/// Proper (2 omega - 2)-orientation of a split graph from a maximal partition.
inline Orientation split_orient(const Graph& g, const SplitPartition& part) {
  if (!is_valid_split_partition(g, part)) fail(ErrorKind::NotSplit, "partition is not a maximal split partition");
  PartialOrientation d(g);
  const int omega = static_cast<int>(part.clique.size());
  if (omega == 0) return d.to_orientation();
  const int n = g.n();
  std::vector<char> in_k(static_cast<std::size_t>(n), 0), in_kh(static_cast<std::size_t>(n), 0);
  for (Vertex v : part.clique) in_k[v] = 1;
  std::vector<Vertex> kh;
  for (Vertex v : part.clique)
    if (g.degree(v) >= 2 * omega - 2) kh.push_back(v), in_kh[v] = 1;
  const int h = static_cast<int>(kh.size());

  for (Vertex a : part.clique)
    if (!in_kh[a])
      for (Vertex b : kh) d.orient(a, b);
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j) d.orient(kh[i], kh[j]);
  auto take_e = [&](int i) {
    int taken = 0;
    for (Vertex w : g.neighbors(kh[i])) {
      if (in_k[w]) continue;
      if (taken++ == omega - 1) break;
      d.orient(w, kh[i]);
    }
  };
  for (int i = 1; i < h; ++i) take_e(i);

  if (h == omega) {
    for (const Edge& e : g.edges())
      if (!d.is_oriented(g.edge_id(e.lo, e.hi))) d.orient(in_k[e.lo] ? e.lo : e.hi, in_k[e.lo] ? e.hi : e.lo);
    return d.to_orientation();
  }
  if (h > 0) take_e(0);

  // Remaining graph G' on V \ K_h: peel a max-degree vertex (degree counts the
  // edges of G' still present, including those to K_h) to fill u_q, u_{q-1}, ...
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (!in_kh[v]) rest.push_back(v);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (Vertex v : rest)
    for (EdgeId e : g.incident_edges(v))
      if (!d.is_oriented(e)) ++deg[v];
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order(rest.size());
  for (std::size_t pos = rest.size(); pos-- > 0;) {
    Vertex best = -1;
    for (Vertex v : rest)
      if (!placed[v] && (best < 0 || deg[v] > deg[best])) best = v;
    order[pos] = best;
    placed[best] = 1;
    for (Vertex w : g.neighbors(best))
      if (!placed[w] && !in_kh[w]) --deg[w];
  }
  std::vector<int> rank(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  for (const Edge& e : g.edges()) {
    EdgeId id = g.edge_id(e.lo, e.hi);
    if (d.is_oriented(id)) continue;
    if (in_kh[e.lo] || in_kh[e.hi]) {
      Vertex kv = in_kh[e.lo] ? e.lo : e.hi;
      d.orient(kv, kv == e.lo ? e.hi : e.lo);
    } else {
      d.orient(rank[e.lo] < rank[e.hi] ? e.lo : e.hi, rank[e.lo] < rank[e.hi] ? e.hi : e.lo);
    }
  }
  return d.to_orientation();
}

// ------------------------------------------------------------ path block graphs

/// Cliques C_1..C_q where consecutive cliques share one vertex (the connectors)
/// and nothing else is shared.
struct PathBlockSequence {
  std::vector<std::vector<Vertex>> cliques;
};

namespace detail {

/// Validates shape and returns the uniform clique size.
inline int check_path_blocks(const PathBlockSequence& seq, Vertex u) {
  const auto& cs = seq.cliques;
  if (cs.empty()) fail(ErrorKind::BadShape, "empty clique sequence");
  const int k = static_cast<int>(cs[0].size());
  std::map<Vertex, std::vector<int>> where;
  for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
    if (static_cast<int>(cs[i].size()) != k) fail(ErrorKind::BadShape, "cliques differ in size");
    std::vector<Vertex> sorted = cs[i];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorKind::BadShape, "repeated vertex in clique " + std::to_string(i));
    for (Vertex v : cs[i]) where[v].push_back(i);
  }
  std::vector<int> shared(cs.size(), 0);
  for (const auto& [v, list] : where) {
    if (list.size() > 2 || (list.size() == 2 && list[1] != list[0] + 1))
      fail(ErrorKind::BadShape, "vertex " + std::to_string(v) + " is shared by non-consecutive cliques");
    if (list.size() == 2) ++shared[list[0]];
  }
  for (std::size_t i = 0; i + 1 < cs.size(); ++i)
    if (shared[i] != 1) fail(ErrorKind::BadShape, "cliques " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                                      " must share exactly one vertex");
  auto it = where.find(u);
  if (it == where.end() || it->second.size() != 1 || it->second[0] != static_cast<int>(cs.size()) - 1)
    fail(ErrorKind::BadShape, "u must be a non-cut vertex of the last clique");
  return k;
}

inline Vertex connector(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  for (Vertex x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return x;
  return -1;
}

/// Transitive orientation of a clique: `fixed` pins vertices to positions,
/// everyone else fills the free positions by increasing id.
inline void orient_clique_positions(PartialOrientation& d, const std::vector<Vertex>& clique,
                                    const std::vector<std::pair<Vertex, int>>& fixed) {
  const int k = static_cast<int>(clique.size());
  std::vector<Vertex> at(static_cast<std::size_t>(k), -1);
  std::vector<char> pinned_vertex;
  for (auto [v, p] : fixed) {
    if (p < 0 || p >= k || at[p] >= 0) fail(ErrorKind::PreconditionViolated, "clique position clash");
    at[p] = v;
  }
  std::vector<Vertex> free;
  for (Vertex v : clique)
    if (std::none_of(fixed.begin(), fixed.end(), [&](auto& f) { return f.first == v; })) free.push_back(v);
  std::sort(free.begin(), free.end());
  std::size_t fi = 0;
  for (int p = 0; p < k; ++p)
    if (at[p] < 0) at[p] = free[fi++];
  orient_transitive(d, at);
}

/// Orients the union of the cliques inside a host partial orientation, with u
/// compensated by (c, dd). Follows the induction on the number of cliques.
inline void path_block_into(PartialOrientation& d, const std::vector<std::vector<Vertex>>& cs, Vertex u, int c,
                            int dd) {
  const int k = static_cast<int>(cs.back().size());
  const int q = static_cast<int>(cs.size());
  if (q == 1) {
    orient_clique_positions(d, cs[0], {{u, dd}});
    return;
  }
  std::vector<std::vector<Vertex>> head(cs.begin(), cs.end() - 1);
  Vertex x = connector(cs[q - 2], cs[q - 1]);
  if (dd >= 1) {
    std::vector<Vertex> vs;
    for (const auto& cl : head) vs.insert(vs.end(), cl.begin(), cl.end());
    auto sub = induced_subgraph(d.graph(), vs);
    copy_arcs(d, sub, source_orientation(sub.graph, sub.to_local[x]));
    orient_clique_positions(d, cs[q - 1], {{x, 0}, {u, dd}});
  } else if (c != 2 * k - 2) {
    path_block_into(d, head, x, 2 * k - 2, k - 1);
    orient_clique_positions(d, cs[q - 1], {{x, k - 1}, {u, 0}});
  } else {
    path_block_into(d, head, x, 2 * k - 3, k - 1);
    orient_clique_positions(d, cs[q - 1], {{x, k - 2}, {u, 0}});
  }
}

inline bool compensation_ok(int k, int c, int d) { return (c > k - 1 && k - 1 >= d && d >= 0) || (c == k - 1 && d == k - 1); }

}  // namespace detail

/// Orientation of a k-uniform path block graph (k >= 3) compensated by (c, d, u),
/// with every indegree at most max(c, 2k - 2). `g` must be exactly the union of
/// the cliques.
inline Orientation path_block_compensated(const Graph& g, const PathBlockSequence& seq, Vertex u, int c, int d) {
  const int k = detail::check_path_blocks(seq, u);
  if (k < 3) fail(ErrorKind::UnsupportedK, "clique size must be at least 3");
  if (!detail::compensation_ok(k, c, d))
    fail(ErrorKind::BadCompensation, "need c > k-1 >= d or c = d = k-1 (k=" + std::to_string(k) +
                                         ", c=" + std::to_string(c) + ", d=" + std::to_string(d) + ")");
  long long edges = 0;
  for (const auto& cl : seq.cliques) {
    for (Vertex v : cl)
      if (!g.contains(v)) fail(ErrorKind::BadShape, "clique vertex outside graph");
    if (!is_clique(g, cl)) fail(ErrorKind::BadShape, "listed clique is not complete in the graph");
    edges += static_cast<long long>(k) * (k - 1) / 2;
  }
  if (edges != g.m()) fail(ErrorKind::BadShape, "graph has edges outside the clique sequence");
  PartialOrientation d0(g);
  detail::path_block_into(d0, seq.cliques, u, c, d);
  return d0.to_orientation();
}

// ---------------------------------------------------------- uniform block graphs

namespace detail {

inline void require_uniform_block(const Graph& g, const BlockCutTree& t, int k) {
  if (k < 3) fail(ErrorKind::UnsupportedK, "block size k must be at least 3, got " + std::to_string(k));
  if (!is_connected(g)) fail(ErrorKind::NotUniformBlock, "graph is not connected");
  if (!is_k_uniform(t, k)) fail(ErrorKind::NotUniformBlock, "not every block is a clique on " + std::to_string(k) + " vertices");
}

// Descendants of a removed cut vertex, frozen at removal time.
struct PathChain {
  std::vector<int> blocks;  // top block first
};
struct CrossCut {
  Vertex x = -1;
  std::vector<PathChain> chains;
};
struct ChildPlan {
  int block = -1;
  bool cross = false;
  PathChain chain;             // path child
  std::vector<CrossCut> cuts;  // cross-point child
};
struct Peel {
  Vertex u = -1;
  std::vector<ChildPlan> children;
};

struct CrossAssignment {
  std::vector<int> pos;    // per cut
  std::vector<int> color;  // per cut
};

/// Positions and colours for the cut vertices of a cross-point block when u sits
/// at position du with colour cu.
inline std::optional<CrossAssignment> plan_cross(int k, int du, int cu, const std::vector<CrossCut>& cuts) {
  const int q = static_cast<int>(cuts.size());
  const int cap = 3 * k - 2;
  std::vector<int> pos(static_cast<std::size_t>(q), -1);
  std::vector<char> used(static_cast<std::size_t>(k), 0);
  used[du] = 1;
  std::optional<CrossAssignment> found;
  auto finish = [&]() -> bool {
    // Pick a special low colour for a cut at position 0 or a high colour; the
    // high colours are handed out by increasing upper limit.
    int zero_idx = -1;
    for (int i = 0; i < q; ++i)
      if (pos[i] == 0) zero_idx = i;
    std::vector<int> specials{-1};
    if (zero_idx >= 0) {
      specials.push_back(0);
      if (cuts[zero_idx].chains.size() == 1) specials.push_back(k - 1);
    }
    for (int special : specials) {
      std::vector<int> color(static_cast<std::size_t>(q), -1);
      if (special >= 0) color[zero_idx] = special;
      if (special == cu) continue;
      std::vector<int> idx;
      for (int i = 0; i < q; ++i)
        if (color[i] < 0) idx.push_back(i);
      auto upper = [&](int i) {
        return std::min(cap, pos[i] + static_cast<int>(cuts[i].chains.size()) * (k - 1));
      };
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return upper(a) < upper(b); });
      std::vector<char> taken(static_cast<std::size_t>(cap + 1), 0);
      if (cu <= cap) taken[cu] = 1;
      bool ok = true;
      for (int i : idx) {
        int col = k;
        while (col <= upper(i) && taken[col]) ++col;
        if (col > upper(i)) {
          ok = false;
          break;
        }
        taken[col] = 1;
        color[i] = col;
      }
      if (!ok) continue;
      // Non-cut vertices keep their position as colour.
      std::vector<char> clash(static_cast<std::size_t>(cap + 1), 0);
      clash[cu] = 1;
      for (int i = 0; i < q; ++i) clash[color[i]] = 1;
      std::vector<char> held(static_cast<std::size_t>(k), 0);
      held[du] = 1;
      for (int i = 0; i < q; ++i) held[pos[i]] = 1;
      for (int t = 0; t < k && ok; ++t)
        if (!held[t] && clash[t]) ok = false;
      if (!ok) continue;
      found = CrossAssignment{pos, color};
      return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == q) return finish();
    for (int p = k - 1; p >= 0; --p) {
      if (used[p]) continue;
      used[p] = 1;
      pos[i] = p;
      if (self(self, i + 1)) return true;
      used[p] = 0;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

inline bool path_child_ok(int k, int c, int d) {
  return (c >= k && c <= 3 * k - 2 && d >= 0 && d <= k - 1) || (c == k - 1 && d == k - 1) || (c == 0 && d == 0);
}

inline std::vector<std::vector<Vertex>> chain_cliques(const BlockCutTree& t, const PathChain& ch, bool u_last) {
  std::vector<std::vector<Vertex>> cs;
  for (int b : ch.blocks) cs.push_back(t.blocks[b]);
  if (u_last) std::reverse(cs.begin(), cs.end());
  return cs;
}

/// Orients a path chain hanging from x, giving x the compensation (c, dd).
inline void orient_chain(PartialOrientation& d, const BlockCutTree& t, const PathChain& ch, Vertex x, int c, int dd) {
  auto cs = chain_cliques(t, ch, true);
  if (c == 0 && dd == 0) {
    std::vector<Vertex> vs;
    for (const auto& cl : cs) vs.insert(vs.end(), cl.begin(), cl.end());
    auto sub = induced_subgraph(d.graph(), vs);
    copy_arcs(d, sub, source_orientation(sub.graph, sub.to_local[x]));
    return;
  }
  path_block_into(d, cs, x, c, dd);
}

/// Splits `total` over `chains` chains, each receiving at most k-1.
inline std::vector<int> spread(int total, std::size_t chains, int k) {
  std::vector<int> out(chains, 0);
  for (auto& x : out) {
    x = std::min(total, k - 1);
    total -= x;
  }
  if (total != 0) fail(ErrorKind::PreconditionViolated, "indegree cannot be spread over the children");
  return out;
}

inline void apply_cross(PartialOrientation& d, const BlockCutTree& t, const ChildPlan& cp, Vertex u, int du,
                        const CrossAssignment& a) {
  const int k = static_cast<int>(t.blocks[cp.block].size());
  std::vector<std::pair<Vertex, int>> fixed{{u, du}};
  for (std::size_t i = 0; i < cp.cuts.size(); ++i) fixed.push_back({cp.cuts[i].x, a.pos[i]});
  orient_clique_positions(d, t.blocks[cp.block], fixed);
  for (std::size_t i = 0; i < cp.cuts.size(); ++i) {
    const auto& cut = cp.cuts[i];
    int col = a.color[i];
    if (col == 0) {
      for (const auto& ch : cut.chains) orient_chain(d, t, ch, cut.x, 0, 0);
    } else if (col == k - 1) {
      orient_chain(d, t, cut.chains[0], cut.x, k - 1, k - 1);
    } else {
      auto ds = spread(col - a.pos[i], cut.chains.size(), k);
      for (std::size_t j = 0; j < cut.chains.size(); ++j) orient_chain(d, t, cut.chains[j], cut.x, col, ds[j]);
    }
  }
}

}  // namespace detail

/// Proper (3k-2)-orientation of a connected k-uniform block graph, k >= 3.
///
/// Cut vertices are removed deepest first (together with everything below them)
/// until the remaining core has maximum degree at most 3k-2; the core is
/// oriented by the potential rule and each removed vertex is then put back in
/// reverse order. A vertex u coming back has indegree s <= k-1 from its parent
/// block; it is given a colour c outside its parent-block neighbours' indegrees
/// and its child structures receive compensated orientations summing to c - s.
inline Orientation uniform_block_orient(const Graph& g, const BlockCutTree& t, int k) {
  detail::require_uniform_block(g, t, k);
  PartialOrientation d(g);
  if (t.block_count() == 1) {
    orient_transitive(d, t.blocks[0]);
    return d.to_orientation();
  }
  const RootedBlockTree rt = root_block_tree(t, 0);
  const int nb = t.block_count();
  const int n = g.n();
  std::vector<char> active(static_cast<std::size_t>(nb), 1);
  auto active_children = [&](Vertex x) {
    std::vector<int> out;
    for (int c : rt.child_blocks[x])
      if (active[c]) out.push_back(c);
    return out;
  };
  auto active_cuts = [&](int b) {
    std::vector<Vertex> out;
    for (Vertex x : rt.child_cuts[b])
      if (!active_children(x).empty()) out.push_back(x);
    return out;
  };
  auto max_active_degree = [&]() {
    std::vector<int> cnt(static_cast<std::size_t>(n), 0);
    int best = 0;
    for (int b = 0; b < nb; ++b)
      if (active[b])
        for (Vertex v : t.blocks[b]) best = std::max(best, ++cnt[v] * (k - 1));
    return best;
  };

  std::vector<detail::Peel> peels;
  while (max_active_degree() > 3 * k - 2) {
    // path_down[b]: b together with its active descendants is a path block graph hanging from b's parent cut.
    std::vector<char> path_down(static_cast<std::size_t>(nb), 0);
    for (auto it = rt.bfs_blocks.rbegin(); it != rt.bfs_blocks.rend(); ++it) {
      int b = *it;
      if (!active[b]) continue;
      auto cuts = active_cuts(b);
      if (cuts.empty()) {
        path_down[b] = 1;
      } else if (cuts.size() == 1) {
        auto ch = active_children(cuts[0]);
        path_down[b] = ch.size() == 1 && path_down[ch[0]];
      }
    }
    Vertex pick = -1;
    int pick_depth = -1;
    for (Vertex x = 0; x < n; ++x) {
      auto ch = active_children(x);
      if (ch.empty()) continue;
      bool connector = std::all_of(ch.begin(), ch.end(), [&](int c) { return path_down[c] != 0; });
      if (connector && ch.size() < 3) continue;
      int depth = rt.depth[rt.parent_block[x]];
      if (depth > pick_depth) pick_depth = depth, pick = x;
    }
    if (pick < 0) fail(ErrorKind::PreconditionViolated, "no removable cut vertex while degree exceeds 3k-2");

    detail::Peel peel;
    peel.u = pick;
    auto chain_from = [&](int b) {
      detail::PathChain ch;
      while (true) {
        ch.blocks.push_back(b);
        auto cuts = active_cuts(b);
        if (cuts.empty()) break;
        b = active_children(cuts[0])[0];
      }
      return ch;
    };
    std::vector<int> subtree;
    for (int c : active_children(pick)) {
      detail::ChildPlan cp;
      cp.block = c;
      if (path_down[c]) {
        cp.chain = chain_from(c);
      } else {
        cp.cross = true;
        for (Vertex x : active_cuts(c)) {
          detail::CrossCut cc;
          cc.x = x;
          for (int cb : active_children(x)) {
            if (!path_down[cb]) fail(ErrorKind::PreconditionViolated, "cut vertex below a cross-point block is not a path connector");
            cc.chains.push_back(chain_from(cb));
          }
          cp.cuts.push_back(std::move(cc));
        }
      }
      std::vector<int> stack{c};
      while (!stack.empty()) {
        int b = stack.back();
        stack.pop_back();
        subtree.push_back(b);
        for (Vertex x : active_cuts(b))
          for (int cb : active_children(x)) stack.push_back(cb);
      }
      peel.children.push_back(std::move(cp));
    }
    for (int b : subtree) active[b] = 0;
    peels.push_back(std::move(peel));
  }

  {
    std::vector<Vertex> core;
    for (int b = 0; b < nb; ++b)
      if (active[b]) core.insert(core.end(), t.blocks[b].begin(), t.blocks[b].end());
    auto sub = induced_subgraph(g, core);
    detail::copy_arcs(d, sub, greedy_orientation(sub.graph));
  }

  const int cap = 3 * k - 2;
  for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
    const detail::Peel& peel = *it;
    const Vertex u = peel.u;
    const int s = d.indegree(u);
    std::vector<char> forbidden(static_cast<std::size_t>(cap + 1), 0);
    for (Vertex w : t.blocks[rt.parent_block[u]])
      if (w != u && d.indegree(w) <= cap) forbidden[d.indegree(w)] = 1;

    const std::size_t p = peel.children.size();
    std::map<std::tuple<std::size_t, int, int>, std::optional<detail::CrossAssignment>> memo;
    auto cross_plan = [&](std::size_t j, int c, int dd) -> const std::optional<detail::CrossAssignment>& {
      auto key = std::tuple{j, c, dd};
      auto f = memo.find(key);
      if (f != memo.end()) return f->second;
      return memo[key] = detail::plan_cross(k, dd, c, peel.children[j].cuts);
    };
    auto child_ok = [&](std::size_t j, int c, int dd) {
      if (!peel.children[j].cross) return detail::path_child_ok(k, c, dd);
      return cross_plan(j, c, dd).has_value();
    };

    int chosen = -1;
    std::vector<int> parts;
    for (int c = s; c <= cap && chosen < 0; ++c) {
      if (forbidden[c]) continue;
      const int need = c - s;
      // reach[j][x]: the first j children can absorb exactly x.
      std::vector<std::vector<char>> reach(p + 1, std::vector<char>(static_cast<std::size_t>(need + 1), 0));
      reach[0][0] = 1;
      for (std::size_t j = 0; j < p; ++j)
        for (int x = 0; x <= need; ++x) {
          if (!reach[j][x]) continue;
          for (int dd = 0; dd <= k - 1 && x + dd <= need; ++dd)
            if (child_ok(j, c, dd)) reach[j + 1][x + dd] = 1;
        }
      if (!reach[p][need]) continue;
      chosen = c;
      parts.assign(p, 0);
      int x = need;
      for (std::size_t j = p; j-- > 0;) {
        for (int dd = std::min(k - 1, x); dd >= 0; --dd)
          if (reach[j][x - dd] && child_ok(j, c, dd)) {
            parts[j] = dd;
            x -= dd;
            break;
          }
      }
    }
    if (chosen < 0)
      fail(ErrorKind::PreconditionViolated, "no admissible indegree for cut vertex " + std::to_string(u));
    for (std::size_t j = 0; j < p; ++j) {
      const auto& cp = peel.children[j];
      if (cp.cross)
        detail::apply_cross(d, t, cp, u, parts[j], *cross_plan(j, chosen, parts[j]));
      else
        detail::orient_chain(d, t, cp.chain, u, chosen, parts[j]);
    }
  }
  return d.to_orientation();
}

/// Proper (k+1)-orientation of a connected k-uniform block graph (k >= 3) whose
/// blocks hold at most two cut vertices. Only transitive clique orientations are
/// used; cut vertices end with indegree 0, k or k+1.
inline Orientation two_cut_block_orient(const Graph& g, const BlockCutTree& t, int k) {
  detail::require_uniform_block(g, t, k);
  if (max_cut_vertices_per_block(t) > 2) fail(ErrorKind::BadShape, "a block holds more than two cut vertices");
  PartialOrientation d(g);
  if (t.block_count() == 1) {
    orient_transitive(d, t.blocks[0]);
    return d.to_orientation();
  }
  int root = -1;
  for (int b = 0; b < t.block_count() && root < 0; ++b)
    if (t.cuts_of(b).size() == 1) root = b;
  const RootedBlockTree rt = root_block_tree(t, root);
  // Position (indegree inside the block) of each cut vertex in its parent block.
  std::vector<int> pos_in_parent(static_cast<std::size_t>(g.n()), -1);
  auto orient_block = [&](int b, const std::vector<std::pair<Vertex, int>>& fixed) {
    detail::orient_clique_positions(d, t.blocks[b], fixed);
    std::vector<Vertex> order(static_cast<std::size_t>(k));
    for (Vertex v : t.blocks[b]) {
      int in = 0;
      for (Vertex w : t.blocks[b])
        if (w != v && d.has_arc(w, v)) ++in;
      order[in] = v;
    }
    for (int p = 0; p < k; ++p)
      if (rt.parent_block[order[p]] == b) pos_in_parent[order[p]] = p;
  };
  orient_block(root, {{t.cuts_of(root)[0], 0}});
  for (std::size_t h = 1; h < rt.bfs_blocks.size(); ++h) {
    int b = rt.bfs_blocks[h];
    Vertex x = rt.parent_cut[b];
    const int in_parent = pos_in_parent[x];
    const bool leftmost = rt.child_blocks[x].front() == b;
    const bool leaf = rt.child_cuts[b].empty();
    if (leaf) {
      // The leftmost child must lift x out of {1, 2} even when it is a leaf block.
      if (in_parent >= 1 && leftmost)
        orient_block(b, {{x, k - 1}});
      else
        orient_block(b, {{x, 0}});
      continue;
    }
    Vertex x2 = rt.child_cuts[b][0];
    if (in_parent == 0)
      orient_block(b, {{x, 0}, {x2, 1}});
    else if (leftmost)
      orient_block(b, {{x, k - 1}, {x2, 0}});
    else
      orient_block(b, {{x, 0}, {x2, in_parent == 1 ? 2 : 1}});
  }
  return d.to_orientation();
}

// ------------------------------------------------------------- outerplanar

enum class AlternatingMode { SinkEnds, SourceEnds, LeftSourceRightSink, LeftSinkRightSource };

/// Arcs of the path alternating direction at every vertex.
inline std::vector<Arc> alternating_arcs(std::span<const Vertex> path, AlternatingMode mode) {
  const std::size_t len = path.size();
  bool odd = len % 2 == 1;
  bool needs_odd = mode == AlternatingMode::SinkEnds || mode == AlternatingMode::SourceEnds;
  if (len >= 1 && odd != needs_odd)
    fail(ErrorKind::BadShape, std::string("mode requires an ") + (needs_odd ? "odd" : "even") + " number of vertices");
  // Vertex i is a source when i % 2 == parity.
  int parity = (mode == AlternatingMode::SourceEnds || mode == AlternatingMode::LeftSourceRightSink) ? 0 : 1;
  std::vector<Arc> out;
  for (std::size_t i = 0; i + 1 < len; ++i) {
    bool src = static_cast<int>(i % 2) == parity;
    out.push_back(src ? Arc{path[i], path[i + 1]} : Arc{path[i + 1], path[i]});
  }
  return out;
}

/// Orients only the path edges of `path` inside g.
inline PartialOrientation orient_alternating(const Graph& g, std::span<const Vertex> path, AlternatingMode mode) {
  PartialOrientation d(g);
  for (const Arc& a : alternating_arcs(path, mode)) d.orient(a.tail, a.head);
  return d;
}

/// Completes the path v_1..v_l (given as v_0, v_1, .., v_l, v_{l+1}) whose
/// vertices hang off the hub v, where everything except the path edges is
/// already oriented. The endpoint and parity case table picks an alternating
/// pattern, with local fixes at the ends, that keeps every indegree distinct.
inline void extend_to_path(PartialOrientation& d, Vertex v, std::span<const Vertex> ext) {
  const Graph& g = d.graph();
  if (ext.size() < 8) fail(ErrorKind::HypothesisViolated, "path needs at least 6 interior vertices");
  const int l = static_cast<int>(ext.size()) - 2;
  auto P = [&](int i) { return ext[static_cast<std::size_t>(i)]; };
  for (int i = 1; i <= l; ++i) {
    Vertex x = P(i);
    if (g.degree(x) != 3 || !g.adjacent(x, P(i - 1)) || !g.adjacent(x, P(i + 1)) || !g.adjacent(x, v))
      fail(ErrorKind::HypothesisViolated, "vertex " + std::to_string(x) + " does not have neighbourhood {v_{i-1}, v, v_{i+1}}");
    if (!d.has_arc(v, x)) fail(ErrorKind::HypothesisViolated, "spoke to " + std::to_string(x) + " is not directed away from v");
  }
  for (int i = 1; i < l; ++i)
    if (d.is_oriented(P(i), P(i + 1))) fail(ErrorKind::HypothesisViolated, "path edge already oriented");
  for (Vertex x : {P(0), P(l + 1), v})
    if (d.unoriented_at(x) != 0) fail(ErrorKind::HypothesisViolated, "vertex " + std::to_string(x) + " has unoriented edges");
  if (d.indegree(v) < 4) fail(ErrorKind::HypothesisViolated, "hub indegree below 4");
  if (d.indegree(P(l)) != 2) fail(ErrorKind::HypothesisViolated, "last path vertex must have indegree 2");
  bool first_case;
  if (d.indegree(P(1)) == 2 && d.has_arc(P(0), P(1)))
    first_case = true;
  else if (d.indegree(P(1)) == 1 && d.has_arc(P(1), P(0)))
    first_case = false;
  else
    fail(ErrorKind::HypothesisViolated, "first path vertex matches neither admissible partial orientation");

  const int a = d.indegree(P(0)), b = d.indegree(P(l + 1));
  const bool even = l % 2 == 0;
  std::vector<Vertex> whole;
  for (int i = 1; i <= l; ++i) whole.push_back(P(i));
  auto sub = [&](int i, int j) { return std::vector<Vertex>(whole.begin() + (i - 1), whole.begin() + j); };
  auto apply = [&](const std::vector<Vertex>& path, AlternatingMode m) {
    for (const Arc& arc : alternating_arcs(path, m)) d.orient(arc.tail, arc.head);
  };
  auto toward = [&](int i, int j) { d.orient(P(j), P(i)); };  // edge v_i v_j toward v_i
  using M = AlternatingMode;
  if (first_case && even) {
    if (a != 2 && b != 3) {
      apply(whole, M::LeftSourceRightSink);
    } else if (a != 3 && b != 2) {
      apply(whole, M::LeftSinkRightSource);
    } else if (a == 2) {  // (2, 2)
      toward(1, 2);
      apply(sub(2, l), M::SinkEnds);
    } else {  // (3, 3)
      toward(2, 1);
      toward(2, 3);
      toward(l - 1, l - 2);
      toward(l - 1, l);
      apply(sub(3, l - 2), M::LeftSourceRightSink);
    }
  } else if (first_case) {
    if (a != 3 && b != 3) {
      apply(whole, M::SinkEnds);
    } else if (a != 2 && b != 2) {
      apply(whole, M::SourceEnds);
    } else if (a == 2) {  // (2, 3)
      toward(1, 2);
      apply(sub(2, l), M::LeftSinkRightSource);
    } else {  // (3, 2), mirror image
      toward(l, l - 1);
      apply(sub(1, l - 1), M::LeftSourceRightSink);
    }
  } else if (even) {
    if (a != 1 && b != 3) {
      apply(whole, M::LeftSourceRightSink);
    } else if (a != 2 && b != 2) {
      apply(whole, M::LeftSinkRightSource);
    } else if (a == 1) {  // (1, 2)
      toward(l, l - 1);
      apply(sub(1, l - 1), M::SinkEnds);
    } else {  // (2, 3)
      toward(l - 1, l - 2);
      toward(l - 1, l);
      apply(sub(1, l - 2), M::LeftSourceRightSink);
    }
  } else {
    if (a != 2 && b != 3) {
      apply(whole, M::SinkEnds);
    } else if (a != 1 && b != 2) {
      apply(whole, M::SourceEnds);
    } else if (a == 2) {  // (2, 2)
      toward(l, l - 1);
      apply(sub(1, l - 1), M::LeftSourceRightSink);
    } else {  // (1, 3)
      toward(l - 1, l - 2);
      toward(l - 1, l);
      apply(sub(1, l - 2), M::SinkEnds);
    }
  }
  for (int i = 0; i <= l; ++i)
    if (d.indegree(P(i)) == d.indegree(P(i + 1)))
      fail(ErrorKind::HypothesisViolated, "path completion left equal indegrees at " + std::to_string(P(i)));
}

struct StripConfig {
  /// Node budget for the exact solver on pieces of maximum degree at most 13.
  std::uint64_t base_budget = 20000;
};

namespace detail {

inline Orientation strip_base(const Graph& g, const StripConfig& cfg) {
  Orientation best = greedy_orientation(g);
  if (g.m() == 0) return best;
  SearchConfig sc;
  sc.node_budget = cfg.base_budget;
  auto r = proper_orientation_number(g, sc);
  if (max_indegree(r.witness) < max_indegree(best) && is_proper(r.witness)) best = r.witness;
  return best;
}

inline Orientation strip_rec(const Graph& g, const StripConfig& cfg) {
  if (g.max_degree() <= 13 || g.n() <= 3) return strip_base(g, cfg);
  const int n = g.n();
  Vertex v = 0;
  for (Vertex x = 1; x < n; ++x)
    if (g.degree(x) > g.degree(v)) v = x;
  const int delta = g.degree(v);
  // Neighbours of v induce a path; walk it from the smaller end.
  auto nv = g.neighbors(v);
  std::vector<char> in_n(static_cast<std::size_t>(n), 0);
  for (Vertex x : nv) in_n[x] = 1;
  auto inner_deg = [&](Vertex x) {
    int c = 0;
    for (Vertex y : g.neighbors(x)) c += in_n[y];
    return c;
  };
  Vertex start = -1;
  for (Vertex x : nv)
    if (inner_deg(x) == 1) {
      start = x;
      break;
    }
  if (start < 0) fail(ErrorKind::NotStrip, "neighbourhood of a maximum-degree vertex is not a path");
  std::vector<Vertex> fan{start};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[start] = 1;
  while (static_cast<int>(fan.size()) < delta) {
    Vertex nxt = -1;
    for (Vertex y : g.neighbors(fan.back()))
      if (in_n[y] && !seen[y]) nxt = y;
    if (nxt < 0) fail(ErrorKind::NotStrip, "neighbourhood of a maximum-degree vertex is not a path");
    seen[nxt] = 1;
    fan.push_back(nxt);
  }
  auto F = [&](int i) { return fan[static_cast<std::size_t>(i - 1)]; };  // 1-based v_i
  for (int i = 3; i <= delta - 2; ++i)
    if (g.degree(F(i)) != 3) fail(ErrorKind::NotStrip, "inner fan vertex of degree other than 3");

  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  removed[v] = 1;
  for (int i = 3; i <= delta - 2; ++i) removed[F(i)] = 1;
  PartialOrientation d(g);
  for (Vertex side : {F(1), F(delta)}) {
    std::vector<Vertex> comp{side};
    std::vector<char> mark(static_cast<std::size_t>(n), 0);
    mark[side] = 1;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (Vertex y : g.neighbors(comp[h]))
        if (!removed[y] && !mark[y]) mark[y] = 1, comp.push_back(y);
    auto s = induced_subgraph(g, comp);
    copy_arcs(d, s, strip_rec(s.graph, cfg));
  }
  for (int i : {1, 2, delta - 1, delta}) d.orient(F(i), v);
  d.orient(F(2), F(3));
  d.orient(F(delta - 1), F(delta - 2));
  std::array<int, 4> S{d.indegree(F(1)), d.indegree(F(2)), d.indegree(F(delta - 1)), d.indegree(F(delta))};
  int j = 0;
  while (std::find(S.begin(), S.end(), 4 + j) != S.end()) ++j;
  for (int i = 3; i <= 2 + j; ++i) d.orient(F(i), v);
  for (int i = 3 + j; i <= delta - 2; ++i) d.orient(v, F(i));
  // Walk v_3..v_{2+j}, each edge v_i v_{i+1} chosen so v_i differs from v_{i-1}.
  for (int i = 3; i <= 2 + j; ++i) {
    int prev = d.indegree(F(i - 1));
    if (d.indegree(F(i)) != prev)
      d.orient(F(i), F(i + 1));
    else
      d.orient(F(i + 1), F(i));
  }
  std::vector<Vertex> ext;
  for (int i = 2 + j; i <= delta - 1; ++i) ext.push_back(F(i));
  extend_to_path(d, v, ext);
  return d.to_orientation();
}

}  // namespace detail

/// Proper orientation with every indegree at most 13 for a maximal outerplanar
/// graph whose weak dual is a path.
inline Orientation outerplanar_strip_orient(const Graph& g, const StripConfig& cfg = {}) {
  if (g.n() <= 2) return greedy_orientation(g);
  if (!maximal_outerplane_weak_dual(g)) fail(ErrorKind::NotStrip, "not a maximal outerplanar graph with a path weak dual");
  return detail::strip_rec(g, cfg);
}

inline Orientation outerplanar_strip_orient(const Graph& g, const TriangleStrip& strip, const StripConfig& cfg = {}) {
  if (static_cast<int>(strip.triangles.size()) != g.n() - 2)
    fail(ErrorKind::NotStrip, "strip does not have n-2 triangles");
  for (const auto& tri : strip.triangles)
    if (!g.adjacent(tri[0], tri[1]) || !g.adjacent(tri[0], tri[2]) || !g.adjacent(tri[1], tri[2]))
      fail(ErrorKind::NotStrip, "listed triangle is not a triangle of the graph");
  return outerplanar_strip_orient(g, cfg);
}

// ------------------------------------------------------------------ cographs

struct CographBounds {
  Rational lower{0, 1};
  int upper = 0;
};

/// Join of two oriented graphs: cross edges all point into the side that keeps
/// the maximum indegree smaller (into G2 on ties). G2's ids are shifted by n1.
inline Orientation cograph_join_orient(const Orientation& d1, const Orientation& d2) {
  const Graph& g1 = d1.graph();
  const Graph& g2 = d2.graph();
  const int n1 = g1.n(), n2 = g2.n();
  Graph g = join(g1, g2);
  const int into2 = std::max(max_indegree(d1), max_indegree(d2) + n1);
  const int into1 = std::max(max_indegree(d1) + n2, max_indegree(d2));
  PartialOrientation d(g);
  for (EdgeId e = 0; e < g1.m(); ++e) d.orient(d1.tail(e), d1.head(e));
  for (EdgeId e = 0; e < g2.m(); ++e) d.orient(n1 + d2.tail(e), n1 + d2.head(e));
  for (Vertex a = 0; a < n1; ++a)
    for (Vertex b = 0; b < n2; ++b) {
      if (into2 <= into1)
        d.orient(a, n1 + b);
      else
        d.orient(n1 + b, a);
    }
  return d.to_orientation();
}

namespace detail {

struct CographPart {
  std::vector<Vertex> vs;
  int max_in = 0;
};

// Orients the subtree at node i inside d (vertex ids are the cotree's leaves).
inline CographPart cograph_rec(const Cotree& t, int i, PartialOrientation& d) {
  const auto& nd = t.node(i);
  if (nd.kind == CotreeNode::Kind::Leaf) return {{nd.vertex}, 0};
  std::vector<CographPart> parts;
  for (int c : nd.children) parts.push_back(cograph_rec(t, c, d));
  CographPart acc = std::move(parts[0]);
  for (std::size_t j = 1; j < parts.size(); ++j) {
    CographPart& nx = parts[j];
    if (nd.kind == CotreeNode::Kind::Union) {
      acc.max_in = std::max(acc.max_in, nx.max_in);
    } else {
      const int n1 = static_cast<int>(acc.vs.size()), n2 = static_cast<int>(nx.vs.size());
      const int into2 = std::max(acc.max_in, nx.max_in + n1);
      const int into1 = std::max(acc.max_in + n2, nx.max_in);
      for (Vertex a : acc.vs)
        for (Vertex b : nx.vs) {
          if (into2 <= into1)
            d.orient(a, b);
          else
            d.orient(b, a);
        }
      acc.max_in = std::min(into1, into2);
    }
    acc.vs.insert(acc.vs.end(), nx.vs.begin(), nx.vs.end());
  }
  return acc;
}

inline Rational average_degree_half(long long m, long long n) { return reduce({m, n}); }

}  // namespace detail

/// Orientation built bottom-up along the cotree; each join is split as
/// (first child) ^ (join of the rest).
inline Orientation cograph_orient(const Cotree& t) {
  Graph g = t.evaluate();
  PartialOrientation d(g);
  if (t.root >= 0) detail::cograph_rec(t, t.root, d);
  return d.to_orientation();
}

/// Lower bound min{Ad(G1) + n2/2, Ad(G2) + n1/2} at a join root (maximum over
/// components at a union root); upper bound is the maximum indegree reached by
/// cograph_orient.
inline CographBounds cograph_bounds(const Cotree& t) {
  CographBounds out;
  if (t.root < 0) return out;
  out.upper = max_indegree(cograph_orient(t));
  Graph g = t.evaluate();
  auto lower_at = [&](auto&& self, int i) -> Rational {
    const auto& nd = t.node(i);
    if (nd.kind == CotreeNode::Kind::Leaf) return {0, 1};
    if (nd.kind == CotreeNode::Kind::Union) {
      Rational best{0, 1};
      for (int c : nd.children) best = std::max(best, self(self, c));
      return best;
    }
    std::vector<Vertex> a = t.leaves(nd.children[0]), b;
    for (std::size_t j = 1; j < nd.children.size(); ++j) {
      auto l = t.leaves(nd.children[j]);
      b.insert(b.end(), l.begin(), l.end());
    }
    const long long n1 = static_cast<long long>(a.size()), n2 = static_cast<long long>(b.size());
    const long long m1 = induced_subgraph(g, a).graph.m(), m2 = induced_subgraph(g, b).graph.m();
    // m1/n1 + n2/2 = (2 m1 + n1 n2) / (2 n1)
    Rational x = reduce({2 * m1 + n1 * n2, 2 * n1});
    Rational y = reduce({2 * m2 + n1 * n2, 2 * n2});
    return std::min(x, y);
  };
  out.lower = lower_at(lower_at, t.root);
  return out;
}

// ----------------------------------------------------------- claw-free chordal

/// Cover of N(v) by at most three cliques in a chordal claw-free graph.
inline std::vector<std::vector<Vertex>> neighborhood_clique_cover(const Graph& g, Vertex v) {
  auto nv = g.neighbors(v);
  std::vector<Vertex> all(nv.begin(), nv.end());
  if (all.empty()) return {};
  if (is_clique(g, all)) return {all};
  if (all.size() <= 3) {
    std::vector<std::vector<Vertex>> out;
    for (Vertex x : all) out.push_back({x});
    return out;
  }
  Vertex u = -1, w = -1;
  for (std::size_t i = 0; i < all.size() && u < 0; ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (!g.adjacent(all[i], all[j])) {
        u = all[i], w = all[j];
        break;
      }
  std::vector<Vertex> nu{u}, nw{w}, nuw;
  for (Vertex z : all) {
    if (z == u || z == w) continue;
    bool zu = g.adjacent(z, u), zw = g.adjacent(z, w);
    if (zu && !zw)
      nu.push_back(z);
    else if (zw && !zu)
      nw.push_back(z);
    else if (zu && zw)
      nuw.push_back(z);
    else
      fail(ErrorKind::NotApplicable, "vertex " + std::to_string(v) + " is the centre of a claw");
  }
  std::vector<std::vector<Vertex>> out{nu, nw};
  if (!nuw.empty()) out.push_back(nuw);
  for (auto& c : out) {
    std::sort(c.begin(), c.end());
    if (!is_clique(g, c)) fail(ErrorKind::NotApplicable, "neighbourhood part is not a clique");
  }
  return out;
}

/// Delta(G) for a chordal claw-free graph, after checking Delta <= 3 omega via
/// three-clique covers of every neighbourhood.
inline int claw_free_chordal_bound(const Graph& g) {
  auto c = chordal_peo(g);
  if (!c) fail(ErrorKind::NotApplicable, "graph is not chordal");
  if (!is_claw_free(g)) fail(ErrorKind::NotApplicable, "graph contains a claw");
  const int omega = g.n() == 0 ? 0 : clique_number_chordal(g, c.peo);
  for (Vertex v = 0; v < g.n(); ++v) {
    auto cover = neighborhood_clique_cover(g, v);
    if (cover.size() > 3) fail(ErrorKind::NotApplicable, "neighbourhood needs more than three cliques");
    for (const auto& cl : cover)
      if (static_cast<int>(cl.size()) > omega - 1)
        fail(ErrorKind::NotApplicable, "neighbourhood clique larger than omega - 1");
  }
  const int delta = g.max_degree();
  if (delta > 3 * omega) fail(ErrorKind::NotApplicable, "maximum degree exceeds 3 omega");
  return delta;
}

}  // namespace orientkit
