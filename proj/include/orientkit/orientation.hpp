#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orientkit/error.hpp"
#include "orientkit/graph.hpp"

namespace orientkit {

/// Directed edge tail -> head.
struct Arc {
  Vertex tail;
  Vertex head;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// A full orientation of a graph: every edge directed, indegrees cached.
///
/// Direction is stored per edge as "points toward the larger endpoint".
/// Immutable once constructed; build incrementally through PartialOrientation.
class Orientation {
 public:
  Orientation() = default;

  /// `toward_hi[e]` tells whether edge e = (lo,hi) is directed lo -> hi.
  Orientation(Graph g, std::vector<std::uint8_t> toward_hi) : graph_(std::move(g)), toward_hi_(std::move(toward_hi)) {
    if (toward_hi_.size() != static_cast<std::size_t>(graph_.m()))
      fail(ErrorKind::InvalidOrientation, "direction vector length differs from edge count");
    indegree_ = recompute_indegrees();
  }

  /// Builds from explicit arcs; each edge of g must appear exactly once.
  static Orientation from_arcs(const Graph& g, std::span<const Arc> arcs) {
    if (arcs.size() != static_cast<std::size_t>(g.m()))
      fail(ErrorKind::InvalidOrientation, "expected " + std::to_string(g.m()) + " arcs, got " +
                                              std::to_string(arcs.size()));
    std::vector<std::uint8_t> dir(static_cast<std::size_t>(g.m()), 2);
    for (const Arc& a : arcs) {
      EdgeId e = g.edge_id(a.tail, a.head);
      if (e < 0)
        fail(ErrorKind::InvalidOrientation,
             "arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) + " is not an edge");
      if (dir[e] != 2)
        fail(ErrorKind::InvalidOrientation,
             "edge " + std::to_string(a.tail) + " " + std::to_string(a.head) + " oriented twice");
      dir[e] = a.head > a.tail ? 1 : 0;
    }
    return Orientation(g, std::move(dir));
  }

  const Graph& graph() const noexcept { return graph_; }
  int indegree(Vertex v) const { return indegree_[v]; }
  const std::vector<int>& indegrees() const noexcept { return indegree_; }

  Vertex head(EdgeId e) const { return toward_hi_[e] ? graph_.edge(e).hi : graph_.edge(e).lo; }
  Vertex tail(EdgeId e) const { return toward_hi_[e] ? graph_.edge(e).lo : graph_.edge(e).hi; }
  bool toward_hi(EdgeId e) const { return toward_hi_[e] != 0; }
  const std::vector<std::uint8_t>& directions() const noexcept { return toward_hi_; }

  /// True when a -> b is an arc.
  bool has_arc(Vertex a, Vertex b) const {
    EdgeId e = graph_.edge_id(a, b);
    return e >= 0 && head(e) == b;
  }

  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(static_cast<std::size_t>(graph_.m()));
    for (EdgeId e = 0; e < graph_.m(); ++e) out.push_back({tail(e), head(e)});
    return out;
  }

  /// Full recount of indegrees from the edge directions (audit path).
  std::vector<int> recompute_indegrees() const {
    std::vector<int> in(static_cast<std::size_t>(graph_.n()), 0);
    for (EdgeId e = 0; e < graph_.m(); ++e) ++in[head(e)];
    return in;
  }

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.graph_ == b.graph_ && a.toward_hi_ == b.toward_hi_;
  }

 private:
  Graph graph_;
  std::vector<std::uint8_t> toward_hi_;
  std::vector<int> indegree_;
};

/// Orientation under construction: edges may still be unoriented.
/// Single-owner mutable state; not synchronized.
class PartialOrientation {
 public:
  enum class State : std::uint8_t { Unoriented, TowardLo, TowardHi };

  PartialOrientation() = default;
  explicit PartialOrientation(Graph g)
      : graph_(std::move(g)),
        state_(static_cast<std::size_t>(graph_.m()), State::Unoriented),
        indegree_(static_cast<std::size_t>(graph_.n()), 0),
        unoriented_(static_cast<std::size_t>(graph_.n()), 0) {
    for (Vertex v = 0; v < graph_.n(); ++v) unoriented_[v] = graph_.degree(v);
    remaining_ = graph_.m();
  }

  const Graph& graph() const noexcept { return graph_; }

  /// Orients {tail, head} as tail -> head. Re-orienting an edge is allowed;
  /// the indegree counters follow.
  void orient(Vertex tail, Vertex head) {
    EdgeId e = graph_.edge_id(tail, head);
    if (e < 0)
      fail(ErrorKind::InvalidOrientation,
           "arc " + std::to_string(tail) + "->" + std::to_string(head) + " is not an edge");
    orient_edge(e, head);
  }

  void orient_edge(EdgeId e, Vertex head) {
    const Edge& ed = graph_.edge(e);
    clear(e);
    state_[e] = head == ed.hi ? State::TowardHi : State::TowardLo;
    ++indegree_[head];
    --unoriented_[ed.lo];
    --unoriented_[ed.hi];
    --remaining_;
  }

  void clear(EdgeId e) {
    if (state_[e] == State::Unoriented) return;
    const Edge& ed = graph_.edge(e);
    --indegree_[state_[e] == State::TowardHi ? ed.hi : ed.lo];
    ++unoriented_[ed.lo];
    ++unoriented_[ed.hi];
    ++remaining_;
    state_[e] = State::Unoriented;
  }

  bool is_oriented(EdgeId e) const { return state_[e] != State::Unoriented; }
  bool is_oriented(Vertex a, Vertex b) const {
    EdgeId e = graph_.edge_id(a, b);
    return e >= 0 && is_oriented(e);
  }
  /// Head of edge e, or -1 if unoriented.
  Vertex head(EdgeId e) const {
    switch (state_[e]) {
      case State::TowardHi: return graph_.edge(e).hi;
      case State::TowardLo: return graph_.edge(e).lo;
      default: return -1;
    }
  }
  bool has_arc(Vertex a, Vertex b) const {
    EdgeId e = graph_.edge_id(a, b);
    return e >= 0 && head(e) == b;
  }

  int indegree(Vertex v) const { return indegree_[v]; }
  const std::vector<int>& indegrees() const noexcept { return indegree_; }
  int unoriented_at(Vertex v) const { return unoriented_[v]; }
  int remaining() const noexcept { return remaining_; }
  bool complete() const noexcept { return remaining_ == 0; }

  /// Lossless conversion once every edge is oriented.
  Orientation to_orientation() const {
    if (!complete())
      fail(ErrorKind::InvalidOrientation, std::to_string(remaining_) + " edges left unoriented");
    std::vector<std::uint8_t> dir(state_.size());
    for (std::size_t e = 0; e < state_.size(); ++e) dir[e] = state_[e] == State::TowardHi ? 1 : 0;
    return Orientation(graph_, std::move(dir));
  }

 private:
  Graph graph_;
  std::vector<State> state_;
  std::vector<int> indegree_;
  std::vector<int> unoriented_;
  int remaining_ = 0;
};

/// (u, c, d): u must have indegree d, and is colored c for the properness check.
struct Compensation {
  Vertex u = 0;
  int color = 0;
  int indegree = 0;
};

/// Adjacent vertices receive distinct indegrees.
inline bool is_proper(const Orientation& d) {
  const auto& in = d.indegrees();
  for (const Edge& e : d.graph().edges())
    if (in[e.lo] == in[e.hi]) return false;
  return true;
}

/// First edge whose endpoints share an indegree, if any.
inline std::optional<Edge> first_conflict(const Orientation& d) {
  const auto& in = d.indegrees();
  for (const Edge& e : d.graph().edges())
    if (in[e.lo] == in[e.hi]) return e;
  return std::nullopt;
}

inline int max_indegree(const Orientation& d) {
  const auto& in = d.indegrees();
  return in.empty() ? 0 : *std::max_element(in.begin(), in.end());
}

inline bool is_compensated_proper(const Orientation& d, const Compensation& comp) {
  if (!d.graph().contains(comp.u) || comp.color < 0 || comp.indegree < 0) return false;
  if (d.indegree(comp.u) != comp.indegree) return false;
  auto color = [&](Vertex v) { return v == comp.u ? comp.color : d.indegree(v); };
  for (const Edge& e : d.graph().edges())
    if (color(e.lo) == color(e.hi)) return false;
  return true;
}

/// Transitive orientation of a clique listed in order: order[i] gets i in-arcs
/// from order[0..i-1].
inline void orient_transitive(PartialOrientation& d, std::span<const Vertex> order) {
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) d.orient(order[i], order[j]);
}

struct Bounds {
  int lower = 0;
  int upper = 0;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// omega - 1 <= chi(G) - 1 <= proper orientation number <= max degree.
inline Bounds generic_bounds(const Graph& g, int omega) {
  return {std::max(0, omega - 1), g.max_degree()};
}

}  // namespace orientkit
