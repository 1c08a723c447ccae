#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <string>

#include "orientkit.hpp"

#ifndef ORIENTKIT_CLI
#error "ORIENTKIT_CLI must point at the built binary"
#endif

namespace fs = std::filesystem;
using namespace orientkit;

namespace {

struct Run {
  int code = -1;
  std::map<std::string, std::string> kv;
  std::string raw;
};

Run run(const std::string& args) {
  Run r;
  std::string cmd = std::string(ORIENTKIT_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), buf.size(), pipe.get())) r.raw += buf.data();
  int status = pclose(pipe.release());
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::size_t pos = 0;
  while (pos < r.raw.size()) {
    auto nl = r.raw.find('\n', pos);
    std::string line = r.raw.substr(pos, nl - pos);
    pos = nl == std::string::npos ? r.raw.size() : nl + 1;
    auto eq = line.find('=');
    if (eq != std::string::npos) r.kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("orientkit_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

std::string strip_elapsed(const std::string& s) {
  std::string out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto nl = s.find('\n', pos);
    std::string line = s.substr(pos, nl - pos);
    pos = nl == std::string::npos ? s.size() : nl + 1;
    if (line.rfind("elapsed_ms=", 0) != 0) out += line + '\n';
  }
  return out;
}

}  // namespace

TEST_F(Cli, VerifyTransitiveTriangle) {
  std::ofstream(path("k3.graph")) << "3 3\n0 1\n0 2\n1 2\n";
  std::ofstream(path("k3.orient")) << "3 3\n0 1\n0 2\n1 2\n";
  auto r = run("verify " + path("k3.graph") + " " + path("k3.orient"));
  EXPECT_EQ(r.code, 0) << r.raw;
  EXPECT_EQ(r.kv["proper"], "true");
  EXPECT_EQ(r.kv["max_indegree"], "2");
}

TEST_F(Cli, VerifyReportsConflictAndCompensation) {
  std::ofstream(path("p3.graph")) << "3 2\n0 1\n1 2\n";
  std::ofstream(path("p3.orient")) << "3 2\n1 0\n1 2\n";
  auto r = run("verify " + path("p3.graph") + " " + path("p3.orient"));
  EXPECT_EQ(r.kv["proper"], "true");
  auto c = run("verify " + path("p3.graph") + " " + path("p3.orient") + " --compensate 1 1 0");
  EXPECT_EQ(c.kv["compensated_proper"], "false");
  EXPECT_EQ(c.code, 1);
  auto c2 = run("verify " + path("p3.graph") + " " + path("p3.orient") + " --compensate 1 4 0");
  EXPECT_EQ(c2.kv["compensated_proper"], "true");
  std::ofstream(path("bad.orient")) << "3 2\n0 1\n1 2\n";
  auto b = run("verify " + path("p3.graph") + " " + path("bad.orient"));
  EXPECT_EQ(b.kv["proper"], "false");
  EXPECT_EQ(b.kv["conflict"], "1,2");
  EXPECT_EQ(b.code, 1);
}

TEST_F(Cli, SolveOptOnSplitTight) {
  auto g = run("generate --tight split --param 2 --out " + path("t2.graph"));
  ASSERT_EQ(g.code, 0) << g.raw;
  EXPECT_TRUE(fs::exists(path("t2.graph.roles")));
  auto s = run("solve " + path("t2.graph") + " --opt --witness-out " + path("w.orient"));
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.kv["value"], "2");
  auto v = run("verify " + path("t2.graph") + " " + path("w.orient"));
  EXPECT_EQ(v.kv["proper"], "true");
  EXPECT_EQ(v.kv["max_indegree"], "2");
  auto k = run("solve " + path("t2.graph") + " --k 1");
  EXPECT_EQ(k.kv["status"], "no");
}

TEST_F(Cli, OrientSplitTightThree) {
  run("generate --tight split --param 3 --out " + path("t3.graph"));
  auto o = run("orient " + path("t3.graph") + " --class split --out " + path("t3.orient"));
  EXPECT_EQ(o.code, 0) << o.raw;
  EXPECT_EQ(o.kv["bound"], "4");
  EXPECT_EQ(o.kv["proper"], "true");
  // Round trip: the written orientation re-verifies with the same numbers.
  auto v = run("verify " + path("t3.graph") + " " + path("t3.orient"));
  EXPECT_EQ(v.kv["proper"], "true");
  EXPECT_EQ(v.kv["max_indegree"], o.kv["max_indegree"]);
  Graph g = io::read_graph_file(path("t3.graph"));
  auto back = io::read_orientation_file(path("t3.orient"), g);
  std::ofstream(path("again.orient")) << "";
  io::write_orientation_file(path("again.orient"), back);
  std::ifstream a(path("t3.orient")), c(path("again.orient"));
  std::string sa((std::istreambuf_iterator<char>(a)), {}), sc((std::istreambuf_iterator<char>(c)), {});
  EXPECT_EQ(sa, sc);
}

TEST_F(Cli, OrientAutoPicksClasses) {
  io::write_graph_file(path("qt.graph"), star_graph(5));
  EXPECT_EQ(run("orient " + path("qt.graph")).kv["class"], "quasi-threshold");
  io::write_graph_file(path("blk.graph"), gen_block_tight(3));
  auto b = run("orient " + path("blk.graph"));
  EXPECT_EQ(b.kv["class"], "two-cut-block");
  EXPECT_EQ(b.kv["proper"], "true");
  io::write_graph_file(path("c5.graph"), cycle_graph(5));
  EXPECT_EQ(run("orient " + path("c5.graph")).kv["class"], "greedy");
}

TEST_F(Cli, ReportsAreReproducible) {
  run("generate --random split --size 14 --seed 5 --out " + path("r.graph"));
  auto a = run("solve " + path("r.graph") + " --opt");
  auto b = run("solve " + path("r.graph") + " --opt");
  EXPECT_EQ(strip_elapsed(a.raw), strip_elapsed(b.raw));
  auto g1 = run("generate --random cograph --size 9 --seed 3 --out " + path("c1.graph"));
  auto g2 = run("generate --random cograph --size 9 --seed 3 --out " + path("c2.graph"));
  EXPECT_EQ(g1.kv["output_hash"], g2.kv["output_hash"]);
}

TEST_F(Cli, SeedEnvironmentOverride) {
  auto a = run("generate --random gnm --size 12 --seed 1 --out " + path("a.graph"));
  auto b = run("generate --random gnm --size 12 --seed 2 --out " + path("b.graph"));
  auto c = run("generate --random gnm --size 12 --seed 2 --out " + path("c.graph"));
  std::string env = "ORIENTKIT_SEED=1 ";
  std::string cmd = env + ORIENTKIT_CLI + " generate --random gnm --size 12 --seed 2 --out " + path("d.graph");
  ASSERT_EQ(std::system(cmd.c_str()) >> 8, 0);
  EXPECT_NE(a.kv["output_hash"], b.kv["output_hash"]);
  EXPECT_EQ(b.kv["output_hash"], c.kv["output_hash"]);
  EXPECT_EQ(io::graph_hash(io::read_graph_file(path("d.graph"))), io::graph_hash(io::read_graph_file(path("a.graph"))));
}

TEST_F(Cli, ErrorsUseExitTwo) {
  std::ofstream(path("c4.graph")) << "4 4\n0 1\n1 2\n2 3\n0 3\n";
  auto r = run("orient " + path("c4.graph") + " --class split");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.kv["error"], "NotSplit");
  auto m = run("verify " + path("missing.graph") + " " + path("missing.orient"));
  EXPECT_EQ(m.code, 2);
  EXPECT_EQ(m.kv["error"], "Parse");
}

TEST_F(Cli, BudgetUsesExitThree) {
  run("generate --random gnm --size 16 --density 0.5 --seed 9 --out " + path("g.graph"));
  auto r = run("solve " + path("g.graph") + " --opt --budget 3");
  EXPECT_EQ(r.code, 3) << r.raw;
  EXPECT_EQ(r.kv["status"], "budget_exceeded");
}

TEST_F(Cli, GadgetsReductionAndKernel) {
  auto s = run("generate --gadget S --k 4 --out " + path("s4.graph"));
  EXPECT_EQ(s.kv["n"], "15");
  auto f = run("generate --gadget F --i 5 --k 3 --out " + path("f.graph"));
  EXPECT_EQ(f.code, 2);
  EXPECT_EQ(f.kv["error"], "BadParams");
  io::write_graph_file(path("k4.graph"), complete_graph(4));
  auto red = run("reduce " + path("k4.graph") + " --k 3 --out " + path("red.graph") + " --cover 0,1,2 --cert-out " +
                 path("cert.orient"));
  EXPECT_EQ(red.code, 0) << red.raw;
  EXPECT_EQ(red.kv["k_prime"], "6");
  EXPECT_EQ(red.kv["chordal"], "true");
  EXPECT_EQ(red.kv["certificate_proper"], "true");
  auto v = run("verify " + path("red.graph") + " " + path("cert.orient"));
  EXPECT_EQ(v.kv["proper"], "true");
  auto gen = run("generate --reduce-vc " + path("k4.graph") + " --k 3 --out " + path("red2.graph"));
  EXPECT_EQ(gen.kv["output_hash"], v.kv["input_hash"]);
  io::write_graph_file(path("k8.graph"), complete_graph(8));
  auto ker = run("kernelize " + path("k8.graph") + " --k 3 --kind cobipartite --out " + path("ker.graph"));
  EXPECT_EQ(ker.kv["trivial_no"], "true");
  EXPECT_EQ(ker.kv["kernel_n"], "5");
}

TEST_F(Cli, Recognize) {
  io::write_graph_file(path("c5.graph"), cycle_graph(5));
  auto r = run("recognize " + path("c5.graph"));
  EXPECT_EQ(r.kv["chordal"], "false");
  EXPECT_EQ(r.kv["chordless_cycle"].empty(), false);
  EXPECT_EQ(r.kv["cograph"], "false");
}
