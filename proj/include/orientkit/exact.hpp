#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "orientkit/error.hpp"
#include "orientkit/extend.hpp"
#include "orientkit/graph.hpp"
#include "orientkit/orientation.hpp"
#include "orientkit/recognizers.hpp"

namespace orientkit {

// Branching order. For decisions: fewest remaining values first vs plain
// vertex ids. For enumeration: edges grouped by a greedy vertex order vs ids.
enum class EdgeOrder {
  Constrained,
  Natural,
};

struct SearchConfig {
  std::optional<std::uint64_t> node_budget;
  EdgeOrder edge_order = EdgeOrder::Constrained;
  bool symmetry_breaking = true;
  /// Optimisation only: solve connected components separately and take the max.
  bool split_components = true;
};

enum class SearchStatus { Yes, No, BudgetExceeded };

struct DecideResult {
  SearchStatus status = SearchStatus::No;
  std::optional<Orientation> witness;
  std::uint64_t nodes = 0;
};

struct OptimumResult {
  SearchStatus status = SearchStatus::Yes;  // Yes, or BudgetExceeded
  int value = 0;
  Orientation witness;
  std::uint64_t nodes = 0;
  int lower = 0;  // best proven lower bound (meaningful when the budget ran out)
  int upper = 0;  // best known upper bound
};

namespace detail {

/// Branch and bound over edge directions with indegree-interval pruning.
class ProperSearch {
 public:
  ProperSearch(const Graph& g, int k, const SearchConfig& cfg, bool symmetry)
      : g_(g), k_(k), cfg_(cfg), symmetry_(symmetry) {
    const int n = g.n();
    cur_.assign(static_cast<std::size_t>(n), 0);
    rem_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) rem_[v] = g.degree(v);
    dir_.assign(static_cast<std::size_t>(g.m()), 0);
    seen_.assign(static_cast<std::size_t>(k + 2), 0);
    build_order();
    twin_prev_.assign(static_cast<std::size_t>(n), -1);
    twin_next_.assign(static_cast<std::size_t>(n), -1);
    if (symmetry_) build_twins();
  }

  /// Visits proper k-orientations; `visit` returns false to stop. Returns
  /// false if the budget ran out.
  bool run(const std::function<bool(const std::vector<std::uint8_t>&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    exceeded_ = false;
    for (Vertex v = 0; v < g_.n(); ++v)
      if (!vertex_ok(v)) return true;
    dfs(0);
    return !exceeded_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void build_order() {
    const int n = g_.n();
    std::vector<int> pos(static_cast<std::size_t>(n), -1), placed_nb(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (pos[v] >= 0) continue;
        if (best < 0 || placed_nb[v] > placed_nb[best] ||
            (placed_nb[v] == placed_nb[best] && g_.degree(v) > g_.degree(best)))
          best = v;
      }
      pos[best] = step;
      for (Vertex w : g_.neighbors(best)) ++placed_nb[w];
    }
    order_.resize(static_cast<std::size_t>(g_.m()));
    for (EdgeId e = 0; e < g_.m(); ++e) order_[e] = e;
    if (cfg_.edge_order == EdgeOrder::Constrained) {
      auto key = [&](EdgeId e) {
        const Edge& ed = g_.edge(e);
        return std::pair{std::max(pos[ed.lo], pos[ed.hi]), std::min(pos[ed.lo], pos[ed.hi])};
      };
      std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) { return key(a) < key(b); });
    }
    pos_ = std::move(pos);
  }

  // Stable twins (non-adjacent, same neighbourhood) are interchangeable;
  // within a class we only accept non-increasing final indegree by id.
  void build_twins() {
    std::vector<Vertex> all(static_cast<std::size_t>(g_.n()));
    for (Vertex v = 0; v < g_.n(); ++v) all[v] = v;
    std::map<std::vector<Vertex>, std::vector<Vertex>> by_nbhd;
    for (Vertex v : all) {
      if (g_.degree(v) == 0) continue;
      auto nb = g_.neighbors(v);
      by_nbhd[std::vector<Vertex>(nb.begin(), nb.end())].push_back(v);
    }
    for (auto& [nb, cls] : by_nbhd)
      for (std::size_t i = 0; i + 1 < cls.size(); ++i) {
        twin_next_[cls[i]] = cls[i + 1];
        twin_prev_[cls[i + 1]] = cls[i];
      }
  }

  bool decided(Vertex v) const { return rem_[v] == 0; }

  // Local feasibility of v: indegree cap, conflicts with decided neighbours,
  // and room in [cur, cur + rem] for a value no decided neighbour holds.
  bool vertex_ok(Vertex v) {
    if (cur_[v] > k_) return false;
    if (decided(v)) {
      for (Vertex w : g_.neighbors(v))
        if (decided(w) && cur_[w] == cur_[v]) return false;
    } else {
      int lo = cur_[v], hi = std::min(cur_[v] + rem_[v], k_);
      int span = hi - lo + 1;
      ++stamp_;
      int blocked = 0;
      for (Vertex w : g_.neighbors(v)) {
        if (!decided(w)) continue;
        int x = cur_[w];
        if (x < lo || x > hi || seen_[x] == stamp_) continue;
        seen_[x] = stamp_;
        if (++blocked == span) return false;
      }
    }
    if (symmetry_) {
      Vertex p = twin_prev_[v], q = twin_next_[v];
      if (p >= 0 && cur_[v] > cur_[p] + rem_[p]) return false;
      if (p >= 0 && decided(p) && cur_[v] > cur_[p]) return false;
      if (q >= 0 && cur_[q] > cur_[v] + rem_[v]) return false;
    }
    return true;
  }

  bool check_after(Vertex a, Vertex b) {
    if (!vertex_ok(a) || !vertex_ok(b)) return false;
    for (Vertex x : {a, b}) {
      if (symmetry_) {
        if (twin_prev_[x] >= 0 && !vertex_ok(twin_prev_[x])) return false;
        if (twin_next_[x] >= 0 && !vertex_ok(twin_next_[x])) return false;
      }
      if (!decided(x)) continue;
      for (Vertex w : g_.neighbors(x))
        if (!decided(w) && !vertex_ok(w)) return false;
    }
    return true;
  }

  void dfs(std::size_t i) {
    if (stopped_ || exceeded_) return;
    if (i == order_.size()) {
      if (!(*visit_)(dir_)) stopped_ = true;
      return;
    }
    EdgeId e = order_[i];
    const Edge& ed = g_.edge(e);
    Vertex later = pos_[ed.lo] > pos_[ed.hi] ? ed.lo : ed.hi;
    for (int attempt = 0; attempt < 2 && !stopped_ && !exceeded_; ++attempt) {
      Vertex head = attempt == 0 ? later : (later == ed.lo ? ed.hi : ed.lo);
      if (cfg_.node_budget && nodes_ >= *cfg_.node_budget) {
        exceeded_ = true;
        return;
      }
      ++nodes_;
      dir_[e] = head == ed.hi ? 1 : 0;
      ++cur_[head];
      --rem_[ed.lo];
      --rem_[ed.hi];
      if (check_after(ed.lo, ed.hi)) dfs(i + 1);
      --cur_[head];
      ++rem_[ed.lo];
      ++rem_[ed.hi];
    }
  }

  const Graph& g_;
  int k_;
  const SearchConfig& cfg_;
  bool symmetry_;
  std::vector<int> cur_, rem_, pos_;
  std::vector<EdgeId> order_;
  std::vector<std::uint8_t> dir_;
  std::vector<int> seen_;
  int stamp_ = 0;
  std::vector<Vertex> twin_prev_, twin_next_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false, exceeded_ = false;
  const std::function<bool(const std::vector<std::uint8_t>&)>* visit_ = nullptr;
};

// Keeps an orientation whose loads respect per-vertex caps, repairing it by
// reversing directed paths. A failed repair proves that no orientation fits,
// since this is augmenting-path max flow in disguise.
class CapFlow {
 public:
  explicit CapFlow(const Graph& g) : g_(g) {
    dir_.assign(static_cast<std::size_t>(g.m()), 0);
    in_.assign(static_cast<std::size_t>(g.n()), 0);
    for (EdgeId e = 0; e < g.m(); ++e) ++in_[g.edge(e).lo];
    mark_.assign(static_cast<std::size_t>(g.n()), 0);
    via_.assign(static_cast<std::size_t>(g.n()), -1);
    parent_.assign(static_cast<std::size_t>(g.n()), -1);
  }

  const std::vector<std::uint8_t>& directions() const { return dir_; }

  // Caps bound indegrees, or outdegrees when `out` is set.
  bool fit(const std::vector<int>& cap, bool out) {
    for (Vertex v = 0; v < g_.n(); ++v)
      while (load(v, out) > cap[v])
        if (!push_from(v, cap, out)) return false;
    return true;
  }

 private:
  Vertex head(EdgeId e) const { return dir_[e] ? g_.edge(e).hi : g_.edge(e).lo; }
  Vertex tail(EdgeId e) const { return dir_[e] ? g_.edge(e).lo : g_.edge(e).hi; }
  int load(Vertex v, bool out) const { return out ? g_.degree(v) - in_[v] : in_[v]; }

  bool push_from(Vertex s, const std::vector<int>& cap, bool out) {
    ++stamp_;
    queue_.clear();
    queue_.push_back(s);
    mark_[s] = stamp_;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      Vertex x = queue_[qi];
      for (EdgeId e : g_.incident_edges(x)) {
        // e counts toward x's load; flipping it moves one unit to the other end.
        if ((out ? tail(e) : head(e)) != x) continue;
        Vertex t = out ? head(e) : tail(e);
        if (mark_[t] == stamp_) continue;
        mark_[t] = stamp_;
        via_[t] = e;
        parent_[t] = x;
        if (load(t, out) < cap[t]) {
          for (Vertex y = t; y != s; y = parent_[y]) {
            EdgeId f = via_[y];
            --in_[head(f)];
            dir_[f] ^= 1;
            ++in_[head(f)];
          }
          return true;
        }
        queue_.push_back(t);
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<std::uint8_t> dir_;
  std::vector<int> in_, mark_;
  std::vector<EdgeId> via_;
  std::vector<Vertex> parent_, queue_;
  int stamp_ = 0;
};

/// Decision search over final indegrees. Each vertex gets a value in [0, k]
/// distinct from its neighbours' values; after every choice two flow checks
/// confirm that some orientation still meets the implied lower and upper
/// indegree bounds (both separately suffice for the pair, by Frank and Gyarfas).
class ValueSearch {
 public:
  ValueSearch(const Graph& g, int k, const SearchConfig& cfg)
      : g_(g), k_(k), cfg_(cfg), up_(g), down_(g) {
    const int n = g.n();
    val_.assign(static_cast<std::size_t>(n), -1);
    hi_.assign(static_cast<std::size_t>(n), 0);
    out_cap_.assign(static_cast<std::size_t>(n), 0);
    twin_prev_.assign(static_cast<std::size_t>(n), -1);
    twin_next_.assign(static_cast<std::size_t>(n), -1);
    used_.assign(static_cast<std::size_t>(k + 1), 0);
    if (cfg.symmetry_breaking) build_twins();
  }

  /// Returns false when the budget ran out.
  bool run() {
    found_ = false;
    exceeded_ = false;
    dfs(0);
    return !exceeded_;
  }

  bool found() const { return found_; }
  const std::vector<std::uint8_t>& witness() const { return up_.directions(); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // Twins in one class can trade values, so values are kept non-increasing
  // along each class. Open and closed neighbourhoods both give classes.
  void build_twins() {
    std::map<std::vector<Vertex>, std::vector<Vertex>> open, closed;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (g_.degree(v) == 0) continue;
      auto nb = g_.neighbors(v);
      std::vector<Vertex> o(nb.begin(), nb.end());
      std::vector<Vertex> c = o;
      c.insert(std::upper_bound(c.begin(), c.end(), v), v);
      open[o].push_back(v);
      closed[c].push_back(v);
    }
    for (auto* groups : {&open, &closed})
      for (auto& [key, cls] : *groups)
        for (std::size_t i = 0; i + 1 < cls.size(); ++i) {
          twin_next_[cls[i]] = cls[i + 1];
          twin_prev_[cls[i + 1]] = cls[i];
        }
  }

  // Value window for an unassigned vertex before neighbour exclusions.
  std::pair<int, int> window(Vertex v) const {
    int lo = 0, hi = std::min(k_, g_.degree(v));
    if (Vertex p = twin_prev_[v]; p >= 0 && val_[p] >= 0) hi = std::min(hi, val_[p]);
    if (Vertex q = twin_next_[v]; q >= 0 && val_[q] >= 0) lo = std::max(lo, val_[q]);
    return {lo, hi};
  }

  // Fills cand with v's admissible values, ascending.
  void candidates(Vertex v, std::vector<int>& cand) {
    cand.clear();
    auto [lo, hi] = window(v);
    if (lo > hi) return;
    ++stamp_;
    for (Vertex w : g_.neighbors(v))
      if (val_[w] >= 0) used_[val_[w]] = stamp_;
    for (int x = lo; x <= hi; ++x)
      if (used_[x] != stamp_) cand.push_back(x);
  }

  bool bounds_ok() {
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (val_[v] >= 0) {
        hi_[v] = val_[v];
        out_cap_[v] = g_.degree(v) - val_[v];
      } else {
        candidates(v, scratch_);
        if (scratch_.empty()) return false;
        hi_[v] = scratch_.back();
        out_cap_[v] = g_.degree(v) - scratch_.front();
      }
    }
    return up_.fit(hi_, false) && down_.fit(out_cap_, true);
  }

  Vertex pick() {
    Vertex best = -1;
    std::size_t best_size = 0;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (val_[v] >= 0) continue;
      if (cfg_.edge_order == EdgeOrder::Natural) return v;
      candidates(v, scratch_);
      if (best < 0 || scratch_.size() < best_size ||
          (scratch_.size() == best_size && g_.degree(v) > g_.degree(best))) {
        best = v;
        best_size = scratch_.size();
      }
    }
    return best;
  }

  void dfs(int depth) {
    if (found_ || exceeded_) return;
    Vertex v = pick();
    if (v < 0) {
      found_ = true;  // up_ now realises the values exactly
      return;
    }
    std::vector<int> cand;
    candidates(v, cand);
    for (int x : cand) {
      if (cfg_.node_budget && nodes_ >= *cfg_.node_budget) {
        exceeded_ = true;
        return;
      }
      ++nodes_;
      val_[v] = x;
      if (bounds_ok()) dfs(depth + 1);
      if (found_ || exceeded_) return;
      val_[v] = -1;
    }
  }

  const Graph& g_;
  int k_;
  const SearchConfig& cfg_;
  CapFlow up_, down_;
  std::vector<int> val_, hi_, out_cap_, used_, scratch_;
  std::vector<Vertex> twin_prev_, twin_next_;
  int stamp_ = 0;
  std::uint64_t nodes_ = 0;
  bool found_ = false, exceeded_ = false;
};


}  // namespace detail

/// Is there a proper orientation with every indegree at most k?
inline DecideResult decide_k_orientation(const Graph& g, int k, const SearchConfig& cfg = {}) {
  if (k < 0) fail(ErrorKind::BadK, "k must be non-negative");
  DecideResult r;
  if (g.max_degree() > 0 && k == 0) return r;  // an arc always creates indegree 1
  Orientation greedy = greedy_orientation(g);
  if (max_indegree(greedy) <= k) {
    r.status = SearchStatus::Yes;
    r.witness = std::move(greedy);
    return r;
  }
  detail::ValueSearch s(g, k, cfg);
  bool complete = s.run();
  r.nodes = s.nodes();
  if (s.found()) {
    r.status = SearchStatus::Yes;
    r.witness = Orientation(g, s.witness());
    if (!is_proper(*r.witness) || max_indegree(*r.witness) > k)
      fail(ErrorKind::InvalidOrientation, "search produced an invalid witness");
  } else {
    r.status = complete ? SearchStatus::No : SearchStatus::BudgetExceeded;
  }
  return r;
}

/// Streams every proper k-orientation exactly once (no symmetry breaking).
/// `visit` returns false to stop early. Throws nothing on budget exhaustion;
/// the returned status is BudgetExceeded instead of Yes/No.
inline SearchStatus enumerate_proper_k_orientations(const Graph& g, int k,
                                                    const std::function<bool(const Orientation&)>& visit,
                                                    std::optional<std::uint64_t> node_budget = std::nullopt,
                                                    std::uint64_t* nodes_out = nullptr) {
  if (k < 0) fail(ErrorKind::BadK, "k must be non-negative");
  SearchConfig cfg;
  cfg.node_budget = node_budget;
  cfg.symmetry_breaking = false;
  bool any = false;
  detail::ProperSearch s(g, k, cfg, false);
  bool complete = s.run([&](const std::vector<std::uint8_t>& dir) {
    any = true;
    return visit(Orientation(g, dir));
  });
  if (nodes_out) *nodes_out = s.nodes();
  if (!complete) return SearchStatus::BudgetExceeded;
  return any ? SearchStatus::Yes : SearchStatus::No;
}

inline std::vector<Orientation> all_proper_k_orientations(const Graph& g, int k,
                                                          std::optional<std::uint64_t> node_budget = std::nullopt) {
  std::vector<Orientation> out;
  auto st = enumerate_proper_k_orientations(
      g, k,
      [&](const Orientation& d) {
        out.push_back(d);
        return true;
      },
      node_budget);
  if (st == SearchStatus::BudgetExceeded) fail(ErrorKind::PreconditionViolated, "enumeration budget exceeded");
  return out;
}

/// Proper orientation number of a disjoint union from its components' values.
inline int disjoint_union_rule(std::span<const int> values) {
  if (values.empty()) fail(ErrorKind::EmptyInput, "no component values");
  return *std::max_element(values.begin(), values.end());
}

namespace detail {

inline OptimumResult optimum_connected(const Graph& g, const SearchConfig& cfg, std::uint64_t& spent) {
  OptimumResult r;
  Orientation greedy = greedy_orientation(g);
  r.upper = max_indegree(greedy);
  r.lower = std::max(0, clique_number(g) - 1);
  r.witness = greedy;
  for (int k = r.lower; k < r.upper; ++k) {
    SearchConfig local = cfg;
    if (cfg.node_budget) local.node_budget = *cfg.node_budget > spent ? *cfg.node_budget - spent : 0;
    auto d = decide_k_orientation(g, k, local);
    spent += d.nodes;
    if (d.status == SearchStatus::BudgetExceeded) {
      r.status = SearchStatus::BudgetExceeded;
      r.lower = k;
      r.value = r.upper;
      return r;
    }
    if (d.status == SearchStatus::Yes) {
      r.witness = *d.witness;
      r.upper = k;
      break;
    }
    r.lower = k + 1;
  }
  r.value = r.upper;
  r.lower = r.upper;
  return r;
}

}  // namespace detail

/// Exact proper orientation number with a witness. Tries k = omega-1, omega, ...
/// until a proper k-orientation appears or k reaches the greedy Delta bound.
inline OptimumResult proper_orientation_number(const Graph& g, const SearchConfig& cfg = {}) {
  std::uint64_t spent = 0;
  OptimumResult r;
  if (!cfg.split_components) {
    r = detail::optimum_connected(g, cfg, spent);
    r.nodes = spent;
    return r;
  }
  auto [comp, count] = connected_components(g);
  if (count <= 1) {
    r = detail::optimum_connected(g, cfg, spent);
    r.nodes = spent;
    return r;
  }
  std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(count));
  for (Vertex v = 0; v < g.n(); ++v) parts[comp[v]].push_back(v);
  std::vector<std::uint8_t> dir(static_cast<std::size_t>(g.m()), 0);
  std::vector<int> values, lowers, uppers;
  bool exceeded = false;
  for (const auto& p : parts) {
    auto sub = induced_subgraph(g, p);
    auto part = detail::optimum_connected(sub.graph, cfg, spent);
    exceeded = exceeded || part.status == SearchStatus::BudgetExceeded;
    values.push_back(part.value);
    lowers.push_back(part.lower);
    uppers.push_back(part.upper);
    for (EdgeId e = 0; e < sub.graph.m(); ++e) {
      Vertex h = sub.to_parent[part.witness.head(e)], t = sub.to_parent[part.witness.tail(e)];
      EdgeId pe = g.edge_id(t, h);
      dir[pe] = h > t ? 1 : 0;
    }
  }
  r.status = exceeded ? SearchStatus::BudgetExceeded : SearchStatus::Yes;
  r.lower = disjoint_union_rule(lowers);
  r.upper = disjoint_union_rule(uppers);
  r.value = disjoint_union_rule(values);
  r.witness = Orientation(g, std::move(dir));
  r.nodes = spent;
  return r;
}

/// Decision on chordal inputs: large cliques answer No immediately, otherwise
/// the exact search decides.
inline DecideResult fpt_chordal(const Graph& g, int k, const SearchConfig& cfg = {}) {
  auto c = chordal_peo(g);
  if (!c) fail(ErrorKind::NotChordal, "input has a chordless cycle of length " + std::to_string(c.cycle.size()));
  if (clique_number_chordal(g, c.peo) >= k + 2) return {};
  return decide_k_orientation(g, k, cfg);
}

}  // namespace orientkit
