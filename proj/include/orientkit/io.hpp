#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orientkit/error.hpp"
#include "orientkit/graph.hpp"
#include "orientkit/orientation.hpp"

namespace orientkit::io {

namespace detail {

// Whitespace-separated integer tokens; '#' starts a comment to end of line.
inline std::vector<long long> tokens(std::istream& in) {
  std::vector<long long> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      long long v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size())
        fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
      out.push_back(v);
    }
  }
  return out;
}

inline std::vector<std::pair<Vertex, Vertex>> pairs_after_header(std::istream& in, long long& n) {
  auto t = tokens(in);
  if (t.size() < 2) fail(ErrorKind::Parse, "missing 'n m' header");
  n = t[0];
  long long m = t[1];
  if (n < 0 || m < 0 || n > (1LL << 30)) fail(ErrorKind::Parse, "bad header");
  if (t.size() != static_cast<std::size_t>(2 + 2 * m))
    fail(ErrorKind::Parse, "expected " + std::to_string(m) + " pairs, found " + std::to_string((t.size() - 2) / 2) +
                               (t.size() % 2 ? " and a dangling token" : ""));
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long a = t[2 + 2 * i], b = t[3 + 2 * i];
    if (a < 0 || b < 0 || a >= n || b >= n)
      fail(ErrorKind::Parse, "pair " + std::to_string(i) + " out of range");
    out.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return out;
}

inline std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::Parse, "cannot open " + path);
  return f;
}

inline std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) fail(ErrorKind::Parse, "cannot write " + path);
  return f;
}

}  // namespace detail

/// "n m" then m lines "u v".
inline Graph read_graph(std::istream& in) {
  long long n = 0;
  auto pairs = detail::pairs_after_header(in, n);
  return Graph(static_cast<int>(n), pairs);
}

inline Graph read_graph_file(const std::string& path) {
  auto f = detail::open_in(path);
  return read_graph(f);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.lo << ' ' << e.hi << '\n';
}

inline void write_graph_file(const std::string& path, const Graph& g) {
  auto f = detail::open_out(path);
  write_graph(f, g);
}

/// Same layout as a graph file; each line "u v" is the arc u -> v.
/// The header must match g.
inline Orientation read_orientation(std::istream& in, const Graph& g) {
  long long n = 0;
  auto pairs = detail::pairs_after_header(in, n);
  if (n != g.n()) fail(ErrorKind::InvalidOrientation, "vertex count differs from graph");
  std::vector<Arc> arcs;
  arcs.reserve(pairs.size());
  for (auto [a, b] : pairs) arcs.push_back({a, b});
  return Orientation::from_arcs(g, arcs);
}

inline Orientation read_orientation_file(const std::string& path, const Graph& g) {
  auto f = detail::open_in(path);
  return read_orientation(f, g);
}

inline void write_orientation(std::ostream& out, const Orientation& d) {
  const Graph& g = d.graph();
  out << g.n() << ' ' << g.m() << '\n';
  for (EdgeId e = 0; e < g.m(); ++e) out << d.tail(e) << ' ' << d.head(e) << '\n';
}

inline void write_orientation_file(const std::string& path, const Orientation& d) {
  auto f = detail::open_out(path);
  write_orientation(f, d);
}

using Roles = std::vector<std::pair<std::string, std::string>>;

inline void write_roles(std::ostream& out, const Roles& roles) {
  for (const auto& [k, v] : roles) out << k << '=' << v << '\n';
}

inline void write_roles_file(const std::string& path, const Roles& roles) {
  auto f = detail::open_out(path);
  write_roles(f, roles);
}

template <class Range>
std::string join_ints(const Range& r, char sep = ',') {
  std::string s;
  bool first = true;
  for (auto x : r) {
    if (!first) s += sep;
    first = false;
    s += std::to_string(x);
  }
  return s;
}

/// FNV-1a over the canonical serialization; stable across runs.
inline std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.n()));
  for (const Edge& e : g.edges()) {
    mix(static_cast<std::uint64_t>(e.lo));
    mix(static_cast<std::uint64_t>(e.hi));
  }
  return h;
}

}  // namespace orientkit::io
