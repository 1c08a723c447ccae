// orientkit: command-line front end. Reports go to stdout as key=value lines;
// graphs and orientations are only ever written to files.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orientkit.hpp"

namespace ok = orientkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;  // verify ran fine but the orientation fails the check
constexpr int kExitError = 2;
constexpr int kExitBudget = 3;

struct Report {
  std::vector<std::pair<std::string, std::string>> lines;
  template <class T>
  void add(const std::string& k, const T& v) {
    std::ostringstream s;
    if constexpr (std::is_same_v<T, bool>)
      s << (v ? "true" : "false");
    else
      s << v;
    lines.emplace_back(k, s.str());
  }
  void print() const {
    for (const auto& [k, v] : lines) std::cout << k << '=' << v << '\n';
  }
};

std::string hex(std::uint64_t h) {
  std::ostringstream s;
  s << std::hex << h;
  return s.str();
}

const char* status_name(ok::SearchStatus s) {
  switch (s) {
    case ok::SearchStatus::Yes: return "yes";
    case ok::SearchStatus::No: return "no";
    case ok::SearchStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

ok::Graph load(Report& r, const std::string& path, const std::string& key = "input_hash") {
  ok::Graph g = ok::io::read_graph_file(path);
  r.add(key, hex(ok::io::graph_hash(g)));
  r.add("n", g.n());
  r.add("m", g.m());
  return g;
}

std::uint64_t effective_seed(std::uint64_t seed) {
  if (const char* env = std::getenv("ORIENTKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      ok::fail(ok::ErrorKind::BadParams, "ORIENTKIT_SEED is not an unsigned integer");
    }
  }
  return seed;
}

// Uniform block size, or 0 when the blocks are not all cliques of one size.
int uniform_k(const ok::BlockCutTree& t) {
  if (t.block_count() == 0 || !ok::is_block_graph(t)) return 0;
  int k = static_cast<int>(t.blocks[0].size());
  return ok::is_k_uniform(t, k) ? k : 0;
}

struct OrientResult {
  std::string cls;
  ok::Orientation d;
  std::string bound;
};

OrientResult orient_as(const ok::Graph& g, std::string cls, int block_k, int c) {
  if (cls == "auto") {
    auto t = ok::block_cut_tree(g);
    int k = ok::is_connected(g) ? uniform_k(t) : 0;
    if (ok::quasi_threshold_cotree(g))
      cls = "quasi-threshold";
    else if (ok::split_partition(g))
      cls = "split";
    else if (k >= 3 && ok::max_cut_vertices_per_block(t) <= 2)
      cls = "two-cut-block";
    else if (k >= 3)
      cls = "uniform-block";
    else if (ok::maximal_outerplane_weak_dual(g))
      cls = "outerplanar-strip";
    else if (ok::cograph_cotree(g).cotree)
      cls = "cograph";
    else
      cls = "greedy";
  }
  if (cls == "quasi-threshold") {
    auto t = ok::quasi_threshold_cotree(g);
    if (!t) ok::fail(ok::ErrorKind::PreconditionViolated, "graph is not quasi-threshold");
    auto d = ok::quasi_threshold_orient(*t);
    // Cotree leaves carry the original ids, so d is already an orientation of g.
    return {cls, ok::Orientation::from_arcs(g, d.arcs()), std::to_string(std::max(0, ok::clique_number(g) - 1))};
  }
  if (cls == "split") {
    auto p = ok::split_partition(g);
    if (!p) ok::fail(ok::ErrorKind::NotSplit, "graph is not split");
    int omega = static_cast<int>(p->clique.size());
    return {cls, ok::split_orient(g, *p), std::to_string(std::max(0, 2 * omega - 2))};
  }
  if (cls == "uniform-block" || cls == "two-cut-block") {
    auto t = ok::block_cut_tree(g);
    int k = block_k > 0 ? block_k : uniform_k(t);
    if (cls == "uniform-block") return {cls, ok::uniform_block_orient(g, t, k), std::to_string(3 * k - 2)};
    return {cls, ok::two_cut_block_orient(g, t, k), std::to_string(k + 1)};
  }
  if (cls == "low-degree") return {cls, ok::low_degree_orient(g, c), std::to_string(c)};
  if (cls == "outerplanar-strip") return {cls, ok::outerplanar_strip_orient(g), "13"};
  if (cls == "cograph") {
    auto res = ok::cograph_cotree(g);
    if (!res.cotree) ok::fail(ok::ErrorKind::PreconditionViolated, "graph is not a cograph (induced P4 found)");
    auto b = ok::cograph_bounds(*res.cotree);
    auto d = ok::cograph_orient(*res.cotree);
    return {cls, ok::Orientation::from_arcs(g, d.arcs()), std::to_string(b.upper)};
  }
  if (cls == "greedy") return {cls, ok::greedy_orientation(g), std::to_string(g.max_degree())};
  ok::fail(ok::ErrorKind::BadParams, "unknown class '" + cls + "'");
}

std::vector<ok::Vertex> parse_list(const std::string& s) {
  std::vector<ok::Vertex> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      ok::fail(ok::ErrorKind::Parse, "bad vertex '" + tok + "'");
    }
  }
  return out;
}

ok::io::Roles reduction_roles(const ok::ReductionOutput& red) {
  ok::io::Roles roles{{"k", std::to_string(red.k)},
                      {"k_prime", std::to_string(red.k_prime)},
                      {"clique", ok::io::join_ints(red.clique)},
                      {"independent", ok::io::join_ints(red.independent)}};
  for (std::size_t i = 0; i < red.gadgets.size(); ++i) {
    const auto& m = red.gadgets[i];
    std::string v = std::string(ok::to_string(m.kind)) + " offset=" + std::to_string(m.offset) +
                    " size=" + std::to_string(m.size) + " host=" + std::to_string(m.host);
    if (m.kind == ok::GadgetKind::F) v += " i=" + std::to_string(m.i) + " head=" + std::to_string(m.offset + m.head);
    if (m.kind == ok::GadgetKind::Z) v += " s=" + std::to_string(m.offset + m.s);
    roles.emplace_back("gadget" + std::to_string(i), v);
  }
  return roles;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper orientations of graphs: exact search, constructors, recognizers and generators"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "Accepted for interface compatibility; search runs on one thread")
      ->check(CLI::PositiveNumber);

  // solve
  auto* solve = app.add_subcommand("solve", "Exact decision (--k) or optimum (--opt)");
  std::string s_graph, s_witness;
  std::optional<int> s_k;
  bool s_opt = false;
  std::optional<std::uint64_t> s_budget;
  solve->add_option("graph", s_graph)->required();
  auto* s_k_opt = solve->add_option("--k", s_k, "Decide whether a proper k-orientation exists");
  auto* s_opt_flag = solve->add_flag("--opt", s_opt, "Compute the proper orientation number");
  s_k_opt->excludes(s_opt_flag);
  solve->add_option("--budget", s_budget, "Search node budget");
  solve->add_option("--witness-out", s_witness, "Write the witness orientation here");

  // orient
  auto* orient = app.add_subcommand("orient", "Run a class constructor");
  std::string o_graph, o_out, o_class = "auto";
  int o_k = 0, o_c = 2;
  orient->add_option("graph", o_graph)->required();
  orient->add_option("--class", o_class)
      ->check(CLI::IsMember({"auto", "quasi-threshold", "split", "uniform-block", "two-cut-block", "low-degree",
                             "outerplanar-strip", "cograph", "greedy"}));
  orient->add_option("--k", o_k, "Block size for block classes (detected when omitted)");
  orient->add_option("--c", o_c, "Degree threshold for low-degree");
  orient->add_option("--out", o_out, "Write the orientation here");

  // verify
  auto* verify = app.add_subcommand("verify", "Check an orientation file against a graph");
  std::string v_graph, v_orient;
  std::vector<int> v_comp;
  verify->add_option("graph", v_graph)->required();
  verify->add_option("orientation", v_orient)->required();
  verify->add_option("--compensate", v_comp, "u c d")->expected(3);

  // recognize
  auto* recognize = app.add_subcommand("recognize", "Report class membership");
  std::string r_graph;
  recognize->add_option("graph", r_graph)->required();

  // generate
  auto* generate = app.add_subcommand("generate", "Emit a gadget, reduction, tight example or random instance");
  std::string g_gadget, g_reduce, g_tight, g_random, g_out, g_roles;
  int g_k = -1, g_i = -1, g_param = -1, g_size = 10, g_c = 2;
  double g_fan = 0.6, g_density = 0.5;
  std::uint64_t g_seed = 1;
  auto* gg = generate->add_option("--gadget", g_gadget)->check(CLI::IsMember({"S", "F", "Z"}));
  auto* gr = generate->add_option("--reduce-vc", g_reduce, "Cubic graph file");
  auto* gt = generate->add_option("--tight", g_tight)->check(CLI::IsMember({"split", "block"}));
  auto* gx = generate->add_option("--random", g_random, "split, quasi-threshold, uniform-block, two-cut-block, strip, cograph, low-degree-tree, gnm");
  gg->excludes(gr, gt, gx);
  gr->excludes(gt, gx);
  gt->excludes(gx);
  generate->add_option("--k", g_k);
  generate->add_option("--i", g_i, "F(i,k) head size");
  generate->add_option("--param", g_param);
  generate->add_option("--size", g_size);
  generate->add_option("--seed", g_seed);
  generate->add_option("--c", g_c);
  generate->add_option("--fan-bias", g_fan);
  generate->add_option("--density", g_density);
  generate->add_option("--out", g_out)->required();
  generate->add_option("--roles", g_roles, "Role sidecar (default: OUT.roles)");

  // kernelize
  auto* kernelize = app.add_subcommand("kernelize", "Split or cobipartite kernel");
  std::string k_graph, k_out, k_kind = "split";
  int k_k = 0;
  kernelize->add_option("graph", k_graph)->required();
  kernelize->add_option("--k", k_k)->required();
  kernelize->add_option("--kind", k_kind)->check(CLI::IsMember({"split", "cobipartite"}));
  kernelize->add_option("--out", k_out)->required();

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Vertex cover reduction with an optional certificate");
  std::string rd_graph, rd_out, rd_cover, rd_cert;
  int rd_k = 0;
  reduce->add_option("graph", rd_graph)->required();
  reduce->add_option("--k", rd_k)->required();
  reduce->add_option("--out", rd_out)->required();
  reduce->add_option("--cover", rd_cover, "Comma-separated vertex cover of the input");
  reduce->add_option("--cert-out", rd_cert, "Write the certificate orientation here");

  CLI11_PARSE(app, argc, argv);

  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  int code = kExitOk;
  try {
    if (*solve) {
      r.add("command", "solve");
      ok::Graph g = load(r, s_graph);
      ok::SearchConfig cfg;
      cfg.node_budget = s_budget;
      std::optional<ok::Orientation> witness;
      if (s_k) {
        auto res = ok::decide_k_orientation(g, *s_k, cfg);
        r.add("k", *s_k);
        r.add("status", status_name(res.status));
        r.add("nodes", res.nodes);
        witness = res.witness;
        if (res.status == ok::SearchStatus::BudgetExceeded) code = kExitBudget;
      } else {
        auto res = ok::proper_orientation_number(g, cfg);
        r.add("status", res.status == ok::SearchStatus::BudgetExceeded ? "budget_exceeded" : "optimal");
        r.add("value", res.value);
        r.add("lower", res.lower);
        r.add("upper", res.upper);
        r.add("nodes", res.nodes);
        witness = res.witness;
        if (res.status == ok::SearchStatus::BudgetExceeded) code = kExitBudget;
      }
      if (witness && !s_witness.empty()) ok::io::write_orientation_file(s_witness, *witness);
    } else if (*orient) {
      r.add("command", "orient");
      ok::Graph g = load(r, o_graph);
      auto res = orient_as(g, o_class, o_k, o_c);
      r.add("class", res.cls);
      r.add("max_indegree", ok::max_indegree(res.d));
      r.add("bound", res.bound);
      r.add("proper", ok::is_proper(res.d));
      if (!o_out.empty()) ok::io::write_orientation_file(o_out, res.d);
    } else if (*verify) {
      r.add("command", "verify");
      ok::Graph g = load(r, v_graph);
      ok::Orientation d = ok::io::read_orientation_file(v_orient, g);
      bool proper = ok::is_proper(d);
      r.add("proper", proper);
      r.add("max_indegree", ok::max_indegree(d));
      if (auto e = ok::first_conflict(d)) r.add("conflict", std::to_string(e->lo) + "," + std::to_string(e->hi));
      bool pass = proper;
      if (!v_comp.empty()) {
        bool cp = ok::is_compensated_proper(d, {v_comp[0], v_comp[1], v_comp[2]});
        r.add("compensated_proper", cp);
        pass = cp;
      }
      if (!pass) code = kExitFalse;
    } else if (*recognize) {
      r.add("command", "recognize");
      ok::Graph g = load(r, r_graph);
      auto ch = ok::chordal_peo(g);
      auto t = ok::block_cut_tree(g);
      auto split = ok::split_partition(g);
      r.add("connected", ok::is_connected(g));
      r.add("max_degree", g.max_degree());
      r.add("omega", ok::clique_number(g));
      r.add("chordal", ch.chordal);
      if (!ch.chordal) r.add("chordless_cycle", ok::io::join_ints(ch.cycle));
      r.add("split", split.has_value());
      if (split) r.add("split_clique", ok::io::join_ints(split->clique));
      r.add("quasi_threshold", ok::quasi_threshold_cotree(g).has_value());
      auto co = ok::cograph_cotree(g);
      r.add("cograph", co.cotree.has_value());
      if (!co.cotree) r.add("p4", ok::io::join_ints(co.p4));
      r.add("claw_free", ok::is_claw_free(g));
      r.add("block_graph", ok::is_block_graph(t));
      r.add("uniform_k", uniform_k(t));
      r.add("max_cuts_per_block", ok::max_cut_vertices_per_block(t));
      r.add("outerplanar_strip", ok::maximal_outerplane_weak_dual(g).has_value());
    } else if (*generate) {
      r.add("command", "generate");
      ok::Graph g;
      ok::io::Roles roles;
      if (!g_gadget.empty()) {
        ok::Gadget gd;
        if (g_gadget == "S") gd = ok::gen_S(g_k);
        else if (g_gadget == "F") gd = ok::gen_F(g_i, g_k);
        else gd = ok::gen_Z(g_k);
        g = gd.graph;
        roles.emplace_back("kind", g_gadget);
        roles.emplace_back("k", std::to_string(gd.meta.k));
        if (!gd.meta.v.empty()) roles.emplace_back("v", ok::io::join_ints(gd.meta.v));
        if (gd.meta.head >= 0) roles.emplace_back("head", std::to_string(gd.meta.head));
        if (gd.meta.kind == ok::GadgetKind::F) roles.emplace_back("i", std::to_string(gd.meta.i));
        if (gd.meta.s >= 0) roles.emplace_back("s", std::to_string(gd.meta.s));
      } else if (!g_reduce.empty()) {
        Report sub;
        auto red = ok::reduce_vertex_cover(load(sub, g_reduce, "source_hash"), g_k);
        r.add("source_hash", sub.lines[0].second);
        g = red.graph;
        roles = reduction_roles(red);
      } else if (!g_tight.empty()) {
        g = g_tight == "split" ? ok::gen_split_tight(g_param) : ok::gen_block_tight(g_param);
        roles.emplace_back("tight", g_tight);
        roles.emplace_back("param", std::to_string(g_param));
      } else if (!g_random.empty()) {
        ok::RandomParams p;
        p.size = g_size;
        p.k = g_k > 0 ? g_k : 3;
        p.c = g_c;
        p.fan_bias = g_fan;
        p.density = g_density;
        std::uint64_t seed = effective_seed(g_seed);
        g = ok::random_class_instance(g_random, p, seed);
        roles.emplace_back("class", g_random);
        roles.emplace_back("size", std::to_string(g_size));
        roles.emplace_back("seed", std::to_string(seed));
      } else {
        ok::fail(ok::ErrorKind::BadParams, "one of --gadget, --reduce-vc, --tight, --random is required");
      }
      ok::io::write_graph_file(g_out, g);
      ok::io::write_roles_file(g_roles.empty() ? g_out + ".roles" : g_roles, roles);
      r.add("output_hash", hex(ok::io::graph_hash(g)));
      r.add("n", g.n());
      r.add("m", g.m());
    } else if (*kernelize) {
      r.add("command", "kernelize");
      ok::Graph g = load(r, k_graph);
      auto res = k_kind == "split" ? ok::split_kernel(g, k_k) : ok::cobipartite_kernel(g, k_k);
      ok::io::write_graph_file(k_out, res.graph);
      r.add("kind", k_kind);
      r.add("k", res.k);
      r.add("trivial_no", res.trivial_no);
      r.add("kernel_n", res.graph.n());
      r.add("kernel_m", res.graph.m());
    } else if (*reduce) {
      r.add("command", "reduce");
      ok::Graph g = load(r, rd_graph);
      auto red = ok::reduce_vertex_cover(g, rd_k);
      ok::io::write_graph_file(rd_out, red.graph);
      ok::io::write_roles_file(rd_out + ".roles", reduction_roles(red));
      r.add("k_prime", red.k_prime);
      r.add("reduced_n", red.graph.n());
      r.add("reduced_m", red.graph.m());
      r.add("chordal", ok::is_chordal(red.graph));
      r.add("diameter", ok::diameter(red.graph));
      if (!rd_cover.empty()) {
        auto d = ok::build_vc_certificate(red, parse_list(rd_cover));
        r.add("certificate_proper", ok::is_proper(d));
        r.add("certificate_max_indegree", ok::max_indegree(d));
        if (!rd_cert.empty()) ok::io::write_orientation_file(rd_cert, d);
      }
    }
  } catch (const ok::Error& e) {
    r.add("error", ok::to_string(e.kind()));
    r.add("message", e.what());
    code = kExitError;
  }
  r.add("threads", threads);
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.add("elapsed_ms", ms);
  r.add("exit", code);
  r.print();
  return code;
}
