#pragma once

// Independent brute-force references. Nothing here calls the library's search,
// recognizers or constructors; only Graph is shared.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "orientkit/graph.hpp"

namespace oracle {

using orientkit::Graph;
using orientkit::Vertex;

/// Indegrees for the orientation encoded by `mask` (bit e set: edge e points to hi).
inline std::vector<int> indegrees(const Graph& g, std::uint64_t mask) {
  std::vector<int> in(static_cast<std::size_t>(g.n()), 0);
  for (int e = 0; e < g.m(); ++e) ++in[(mask >> e) & 1 ? g.edge(e).hi : g.edge(e).lo];
  return in;
}

inline bool proper(const Graph& g, const std::vector<int>& in) {
  for (const auto& e : g.edges())
    if (in[e.lo] == in[e.hi]) return false;
  return true;
}

/// Calls f(mask, indegrees) for every proper orientation of max indegree <= k.
inline void for_each_proper(const Graph& g, int k, const std::function<void(std::uint64_t, const std::vector<int>&)>& f) {
  const std::uint64_t total = std::uint64_t{1} << g.m();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto in = indegrees(g, mask);
    if (*std::max_element(in.begin(), in.end()) <= k && proper(g, in)) f(mask, in);
  }
}

inline std::uint64_t count_proper(const Graph& g, int k) {
  std::uint64_t c = 0;
  if (g.n() == 0) return 1;
  for_each_proper(g, k, [&](std::uint64_t, const std::vector<int>&) { ++c; });
  return c;
}

/// Proper orientation number by full 2^m enumeration.
inline int proper_orientation_number(const Graph& g) {
  if (g.n() == 0) return 0;
  int best = g.n();
  const std::uint64_t total = std::uint64_t{1} << g.m();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto in = indegrees(g, mask);
    if (proper(g, in)) best = std::min(best, *std::max_element(in.begin(), in.end()));
  }
  return best;
}

/// Clique number by subset enumeration (n <= 20).
inline int clique_number(const Graph& g) {
  const int n = g.n();
  int best = 0;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      if (s >> a & 1)
        for (int b = a + 1; b < n && ok; ++b)
          if ((s >> b & 1) && !g.adjacent(a, b)) ok = false;
    if (ok) best = size;
  }
  return best;
}

/// Chordality by brute force: some induced cycle of length >= 4 exists?
/// Checks every vertex subset of size >= 4 for being an induced cycle (n <= 16).
inline bool has_induced_long_cycle(const Graph& g) {
  const int n = g.n();
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = __builtin_popcount(s);
    if (size < 4) continue;
    bool all2 = true;
    int start = -1;
    for (int a = 0; a < n && all2; ++a) {
      if (!(s >> a & 1)) continue;
      start = a;
      int d = 0;
      for (int b : g.neighbors(a))
        if (s >> b & 1) ++d;
      if (d != 2) all2 = false;
    }
    if (!all2) continue;
    // 2-regular: connected means one cycle.
    std::uint32_t seen = 1u << start;
    std::vector<int> st{start};
    while (!st.empty()) {
      int a = st.back();
      st.pop_back();
      for (int b : g.neighbors(a))
        if ((s >> b & 1) && !(seen >> b & 1)) seen |= 1u << b, st.push_back(b);
    }
    if (seen == s) return true;
  }
  return false;
}

/// Induced P4 by quadruple scan.
inline bool has_induced_p4(const Graph& g) {
  const int n = g.n();
  for (int a = 0; a < n; ++a)
    for (int b : g.neighbors(a))
      for (int c : g.neighbors(b)) {
        if (c == a || g.adjacent(a, c)) continue;
        for (int d : g.neighbors(c))
          if (d != b && d != a && !g.adjacent(d, a) && !g.adjacent(d, b)) return true;
      }
  return false;
}

/// Split by trying every clique as K (n <= 16).
inline bool is_split(const Graph& g) {
  const int n = g.n();
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b) {
        bool ia = s >> a & 1, ib = s >> b & 1;
        if (ia && ib && !g.adjacent(a, b)) ok = false;
        if (!ia && !ib && g.adjacent(a, b)) ok = false;
      }
    if (ok) return true;
  }
  return false;
}

inline bool has_claw(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        for (std::size_t l = j + 1; l < nb.size(); ++l)
          if (!g.adjacent(nb[i], nb[j]) && !g.adjacent(nb[i], nb[l]) && !g.adjacent(nb[j], nb[l])) return true;
  }
  return false;
}

/// Cut vertices by deletion and component count.
inline std::vector<Vertex> cut_vertices(const Graph& g) {
  auto comps = [&](int skip) {
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    int c = 0;
    for (int s = 0; s < g.n(); ++s) {
      if (s == skip || seen[s]) continue;
      ++c;
      std::vector<int> st{s};
      seen[s] = 1;
      while (!st.empty()) {
        int a = st.back();
        st.pop_back();
        for (int b : g.neighbors(a))
          if (b != skip && !seen[b]) seen[b] = 1, st.push_back(b);
      }
    }
    return c;
  };
  int base = comps(-1);
  std::vector<Vertex> out;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0 && comps(v) > base) out.push_back(v);
  return out;
}

/// Seeded G(n, p) corpus.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> es;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) es.emplace_back(a, b);
  return Graph(n, es);
}

/// Same, but stops adding edges once m reaches `max_m`.
inline Graph random_graph_capped(int n, double p, int max_m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<std::pair<int, int>> es;
  for (auto e : all)
    if (static_cast<int>(es.size()) < max_m && static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) es.push_back(e);
  return Graph(n, es);
}

}  // namespace oracle
