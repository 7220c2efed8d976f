#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string tmp_path(const std::string& name) { return "/tmp/cotree4_test_" + name; }

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("generate, solve and verify round trip") {
  auto g = run("generate --family rt -n 24 --seed 5 -o " + tmp_path("rt24.graph"));
  REQUIRE(g.exit_code == 0);

  auto s = run("solve " + tmp_path("rt24.graph"));
  REQUIRE(s.exit_code == 0);
  CHECK(s.out.find("tree:") != std::string::npos);
  CHECK(s.out.find("cotree:") != std::string::npos);
  CHECK(s.out.find("certificate:") != std::string::npos);
  CHECK(s.out.find("tree_max_degree") != std::string::npos);

  // identical runs are byte-identical
  auto s2 = run("solve " + tmp_path("rt24.graph"));
  CHECK(s.out == s2.out);

  // feed the tree back into verify
  auto pos = s.out.find("tree:");
  auto end = s.out.find('\n', pos);
  std::string tree = s.out.substr(pos + 5, end - pos - 5);
  auto v = run("verify " + tmp_path("rt24.graph") + " --tree \"" + tree + "\"");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("PASS SpanningTree") != std::string::npos);
  CHECK(v.out.find("PASS CoTreeDuality") != std::string::npos);
  CHECK(v.out.find("PASS DegreeBound") != std::string::npos);
}

TEST_CASE("verify rejects a bad pair with exit code 1") {
  run("generate --family k4 -o " + tmp_path("k4.graph"));
  auto v = run("verify " + tmp_path("k4.graph") + " --tree \"0-1 1-2 0-2\"");
  CHECK(v.exit_code == 1);
  CHECK(v.out.find("FAIL SpanningTree") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("solve").exit_code == 2);
}

TEST_CASE("out-of-class inputs exit with code 1") {
  run("generate --family sun -k 5 -o " + tmp_path("sun5.graph"));
  auto s = run("solve " + tmp_path("sun5.graph"));
  CHECK(s.exit_code == 1);
}

TEST_CASE("solve emits wood and partition dumps on request") {
  run("generate --family example -o " + tmp_path("worked_example.graph"));
  auto s = run("solve " + tmp_path("worked_example.graph") + " --dump-wood --dump-opp");
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("wood:") != std::string::npos);
  CHECK(s.out.find("uni") != std::string::npos);
  CHECK(s.out.find("opp:") != std::string::npos);
  CHECK(s.out.find("| left=") != std::string::npos);
}

TEST_CASE("oracle reports the exhaustive comparison") {
  run("generate --family k4 -o " + tmp_path("k4.graph"));
  auto o = run("oracle " + tmp_path("k4.graph"));
  CHECK(o.exit_code == 0);
  CHECK(o.out.find("oracle_trees 16") != std::string::npos);
  CHECK(o.out.find("oracle_best 2") != std::string::npos);
  CHECK(o.out.find("grunbaum_33_pair yes") != std::string::npos);
}

TEST_CASE("export produces dot and svg") {
  run("generate --family wheel -k 5 -o " + tmp_path("w5.graph"));
  auto d = run("export " + tmp_path("w5.graph") + " --export-format dot");
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("digraph wood {") != std::string::npos);
  CHECK(d.out.find("color=red") != std::string::npos);
  auto s = run("export " + tmp_path("w5.graph") + " --export-format svg --solve");
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("<svg") != std::string::npos);
  CHECK(s.out.find("stroke-dasharray") != std::string::npos);
}

TEST_CASE("bench runs a tiny custom schedule") {
  auto b = run("bench --sizes 50 100");
  CHECK(b.exit_code == 0);
  CHECK(b.out.find("n,seconds") != std::string::npos);
  CHECK(b.out.find("fitted_exponent") != std::string::npos);
}

TEST_SUITE_END();
