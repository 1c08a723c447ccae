#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orientkit/error.hpp"

namespace orientkit {

using Vertex = int;
using EdgeId = int;

/// Undirected edge stored canonically with `lo < hi`.
struct Edge {
  Vertex lo;
  Vertex hi;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Copies are cheap: the adjacency data is shared and never mutated after
/// construction, so a Graph may be passed across threads freely. Edge ids are
/// the positions of the canonical edges in lexicographic order.
class Graph {
 public:
  Graph() : data_(std::make_shared<const Data>()) {}

  /// Builds a graph from an edge list. Throws InvalidGraph on loops,
  /// duplicate edges, or endpoints outside [0, n).
  Graph(int n, std::span<const Edge> edges) : data_(build(n, edges)) {}
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<Edge> es;
    es.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a == b) fail(ErrorKind::InvalidGraph, "self-loop at vertex " + std::to_string(a));
      es.push_back(make_edge(a, b));
    }
    data_ = build(n, es);
  }

  int n() const noexcept { return data_->n; }
  int m() const noexcept { return static_cast<int>(data_->edges.size()); }

  std::span<const Edge> edges() const noexcept { return data_->edges; }
  const Edge& edge(EdgeId e) const { return data_->edges[static_cast<std::size_t>(e)]; }

  /// Sorted neighbor list of v.
  std::span<const Vertex> neighbors(Vertex v) const {
    const auto& d = *data_;
    return {d.adj.data() + d.offset[v], d.adj.data() + d.offset[v + 1]};
  }
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const {
    const auto& d = *data_;
    return {d.adj_edge.data() + d.offset[v], d.adj_edge.data() + d.offset[v + 1]};
  }

  int degree(Vertex v) const { return data_->offset[v + 1] - data_->offset[v]; }

  int max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n(); ++v) best = std::max(best, degree(v));
    return best;
  }

  bool adjacent(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n() || b >= n() || a == b) return false;
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  /// Edge id of {a,b}, or -1 when absent.
  EdgeId edge_id(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n() || b >= n() || a == b) return -1;
    auto nb = neighbors(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return -1;
    return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
  }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < n(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n() == b.n() && std::ranges::equal(a.edges(), b.edges());
  }

 private:
  struct Data {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<int> offset{0};
    std::vector<Vertex> adj;
    std::vector<EdgeId> adj_edge;
  };

  static std::shared_ptr<const Data> build(int n, std::span<const Edge> input) {
    if (n < 0) fail(ErrorKind::InvalidGraph, "negative vertex count");
    auto d = std::make_shared<Data>();
    d->n = n;
    d->edges.reserve(input.size());
    for (Edge e : input) {
      e = make_edge(e.lo, e.hi);
      if (e.lo == e.hi) fail(ErrorKind::InvalidGraph, "self-loop at vertex " + std::to_string(e.lo));
      if (e.lo < 0 || e.hi >= n)
        fail(ErrorKind::InvalidGraph, "edge endpoint out of range: " + std::to_string(e.lo) + " " +
                                          std::to_string(e.hi));
      d->edges.push_back(e);
    }
    std::sort(d->edges.begin(), d->edges.end());
    if (auto it = std::adjacent_find(d->edges.begin(), d->edges.end()); it != d->edges.end())
      fail(ErrorKind::InvalidGraph,
           "parallel edge " + std::to_string(it->lo) + " " + std::to_string(it->hi));

    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : d->edges) {
      ++deg[e.lo];
      ++deg[e.hi];
    }
    d->offset.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) d->offset[v + 1] = d->offset[v] + deg[v];
    d->adj.resize(2 * d->edges.size());
    d->adj_edge.resize(2 * d->edges.size());
    std::vector<int> fill(d->offset.begin(), d->offset.end() - 1);
    // Edges are sorted by (lo, hi): filling every lower neighbor first, then
    // every higher neighbor, leaves each adjacency list sorted.
    for (std::size_t i = 0; i < d->edges.size(); ++i) {
      const Edge& e = d->edges[i];
      d->adj[fill[e.hi]] = e.lo;
      d->adj_edge[fill[e.hi]++] = static_cast<EdgeId>(i);
    }
    for (std::size_t i = 0; i < d->edges.size(); ++i) {
      const Edge& e = d->edges[i];
      d->adj[fill[e.lo]] = e.hi;
      d->adj_edge[fill[e.lo]++] = static_cast<EdgeId>(i);
    }
    return d;
  }

  std::shared_ptr<const Data> data_;
};

/// Mutable edge-list accumulator used by generators.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n = 0) : n_(n) {}

  Vertex add_vertex() { return n_++; }
  Vertex add_vertices(int count) {
    Vertex first = n_;
    n_ += count;
    return first;
  }
  void add_edge(Vertex a, Vertex b) { edges_.push_back(make_edge(a, b)); }
  void add_clique(std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
  }
  /// Copies g in with ids shifted; returns the offset of g's vertex 0.
  Vertex append(const Graph& g) {
    Vertex off = add_vertices(g.n());
    for (const Edge& e : g.edges()) add_edge(e.lo + off, e.hi + off);
    return off;
  }

  int n() const noexcept { return n_; }
  Graph build() const { return Graph(n_, edges_); }

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// Induced subgraph with its vertex map back to the parent graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local id -> parent id
  std::vector<Vertex> to_local;   // parent id -> local id, -1 when absent
};

inline Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Subgraph s;
  s.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(s.to_parent.begin(), s.to_parent.end());
  s.to_parent.erase(std::unique(s.to_parent.begin(), s.to_parent.end()), s.to_parent.end());
  s.to_local.assign(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < s.to_parent.size(); ++i) s.to_local[s.to_parent[i]] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (Vertex p : s.to_parent)
    for (Vertex q : g.neighbors(p))
      if (p < q && s.to_local[q] >= 0) es.push_back({s.to_local[p], s.to_local[q]});
  s.graph = Graph(static_cast<int>(s.to_parent.size()), es);
  return s;
}

/// Vertex-disjoint union; g2's vertices are shifted by g1.n().
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  GraphBuilder b;
  b.append(g1);
  b.append(g2);
  return b.build();
}

/// Join: disjoint union plus every edge between the two sides.
inline Graph join(const Graph& g1, const Graph& g2) {
  GraphBuilder b;
  Vertex o1 = b.append(g1);
  Vertex o2 = b.append(g2);
  for (Vertex a = 0; a < g1.n(); ++a)
    for (Vertex c = 0; c < g2.n(); ++c) b.add_edge(o1 + a, o2 + c);
  return b.build();
}

inline Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex c = a + 1; c < n; ++c) b.add_edge(a, c);
  return b.build();
}

inline Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex a = 0; a + 1 < n; ++a) b.add_edge(a, a + 1);
  return b.build();
}

inline Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (Vertex a = 0; a < n; ++a) b.add_edge(a, (a + 1) % n);
  return b.build();
}

inline Graph star_graph(int leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex a = 1; a <= leaves; ++a) b.add_edge(0, a);
  return b.build();
}

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.n());
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex c = a + 1; c < g.n(); ++c)
      if (!g.adjacent(a, c)) b.add_edge(a, c);
  return b.build();
}

/// Component id per vertex (ids in order of smallest member), and count.
inline std::pair<std::vector<int>, int> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  return {comp, count};
}

inline bool is_connected(const Graph& g) { return g.n() <= 1 || connected_components(g).second == 1; }

/// BFS distances from s; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, Vertex s) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  std::queue<Vertex> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

/// Diameter of a connected graph; -1 when disconnected.
inline int diameter(const Graph& g) {
  int best = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d < 0) return -1;
      best = std::max(best, d);
    }
  }
  return best;
}

inline bool is_clique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

inline bool is_independent(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

/// Average degree ratio |E|/|V| as an exact fraction.
struct Rational {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.num * b.den == b.num * a.den; }
  friend auto operator<=>(const Rational& a, const Rational& b) { return a.num * b.den <=> b.num * a.den; }
};

inline Rational reduce(Rational r) {
  long long g = std::gcd(r.num, r.den);
  if (g == 0) return {0, 1};
  return {r.num / g, r.den / g};
}

}  // namespace orientkit
