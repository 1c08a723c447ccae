#pragma once

#include <span>
#include <string>
#include <vector>

#include "orientkit/error.hpp"
#include "orientkit/graph.hpp"
#include "orientkit/orientation.hpp"

namespace orientkit {

/// Extends a proper orientation of G[S] (given as arcs in G's ids) to a proper
/// Delta(G)-orientation of G. Vertices of S keep their indegree.
///
/// Edges between S and the rest point away from S. The rest is finished by the
/// potential rule: repeatedly take the vertex outside S with an unoriented edge
/// whose indegree-from-S plus unoriented-degree is largest (smallest id on ties)
/// and point all of its unoriented edges at it.
inline Orientation extend_partial(const Graph& g, std::span<const Vertex> s, std::span<const Arc> arcs_in_s) {
  const int n = g.n();
  std::vector<char> in_s(static_cast<std::size_t>(n), 0);
  for (Vertex v : s) {
    if (!g.contains(v)) fail(ErrorKind::PreconditionViolated, "vertex " + std::to_string(v) + " not in graph");
    in_s[v] = 1;
  }
  PartialOrientation d(g);
  for (const Arc& a : arcs_in_s) {
    if (!g.contains(a.tail) || !g.contains(a.head) || !in_s[a.tail] || !in_s[a.head])
      fail(ErrorKind::PreconditionViolated, "arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                                                " does not lie inside S");
    EdgeId e = g.edge_id(a.tail, a.head);
    if (e < 0) fail(ErrorKind::PreconditionViolated, "arc is not an edge of the graph");
    if (d.is_oriented(e)) fail(ErrorKind::PreconditionViolated, "edge oriented twice in D_S");
    d.orient_edge(e, a.head);
  }
  std::vector<int> in_s_deg(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) {
      if (in_s[v] && in_s[w]) {
        if (!d.is_oriented(v, w))
          fail(ErrorKind::PreconditionViolated,
               "edge " + std::to_string(v) + " " + std::to_string(w) + " of G[S] is not oriented");
        if (v < w && d.indegree(v) == d.indegree(w))
          fail(ErrorKind::PreconditionViolated, "D_S is not proper at edge " + std::to_string(v) + " " +
                                                    std::to_string(w));
      }
      if (!in_s[v] && in_s[w]) ++in_s_deg[v];
    }
  for (Vertex v = 0; v < n; ++v) {
    if (in_s[v]) continue;
    for (Vertex u : g.neighbors(v))
      if (in_s[u] && in_s_deg[v] <= d.indegree(u))
        fail(ErrorKind::PreconditionViolated, "vertex " + std::to_string(v) + " has " + std::to_string(in_s_deg[v]) +
                                                  " neighbours in S but neighbour " + std::to_string(u) +
                                                  " has indegree " + std::to_string(d.indegree(u)));
  }
  for (const Edge& e : g.edges())
    if (in_s[e.lo] != in_s[e.hi]) d.orient(in_s[e.lo] ? e.lo : e.hi, in_s[e.lo] ? e.hi : e.lo);

  std::vector<int> base(d.indegrees());
  while (true) {
    Vertex best = -1;
    int best_pot = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (in_s[v] || d.unoriented_at(v) == 0) continue;
      int pot = base[v] + d.unoriented_at(v);
      if (pot > best_pot) best_pot = pot, best = v;
    }
    if (best < 0) break;
    for (EdgeId e : g.incident_edges(best))
      if (!d.is_oriented(e)) d.orient_edge(e, best);
  }
  return d.to_orientation();
}

/// Proper Delta(G)-orientation with no constraints.
inline Orientation greedy_orientation(const Graph& g) { return extend_partial(g, {}, {}); }

/// Proper Delta(G)-orientation in which u is a source.
inline Orientation source_orientation(const Graph& g, Vertex u) {
  Vertex s[1] = {u};
  return extend_partial(g, s, {});
}

}  // namespace orientkit
