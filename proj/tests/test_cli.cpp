#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "support.hpp"

#ifndef MGRAPH_BIN
#error "MGRAPH_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run(const std::string& args) {
  const std::string command = std::string(MGRAPH_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[512];
  while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "mgraph-cli-tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string file_with(const std::string& name, const std::string& content) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << content;
  return path.string();
}

const std::string kCycle = "edge 1 1\nedge 2 2\nglue 1:0 2:1\nglue 1:1 2:0\n";
const std::string kTwoLoops = "edge 1 1\nedge 2 2\nglue 1:0 1:1\nglue 2:0 2:1\n";
const std::string kFigure8 = "edge 1 1\nedge 2 2\nglue 1:0 1:1\nglue 1:1 2:0\nglue 2:0 2:1\n";
const std::string kTriangle =
    "edge a 1\nedge b 2\nedge c 4\nglue a:1 b:0\nglue b:1 c:0\nglue c:1 a:0\n";

}  // namespace

TEST_CASE("cli: info lists vertices, degrees, components and volume") {
  const auto path = file_with("lasso.mg", "edge 1 1\nedge 2 2\nglue 1:0 1:1\nglue 1:0 2:0\n");
  const RunResult r = run("info " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "edges 2\n"
        "volume 3\n"
        "connected yes\n"
        "vertex {1:0 1:1 2:0} degree 2 multiplicity 3\n"
        "vertex {2:1} degree 1 multiplicity 1\n"
        "component {1 2}\n");
}

TEST_CASE("cli: dist prints exact rationals or inf") {
  const auto triangle = file_with("triangle.mg", kTriangle);
  CHECK(run("dist " + triangle + " c@0 c@4").output == "3\n");
  CHECK(run("dist " + triangle + " a@1/2 b@1/2").output == "1\n");
  const auto split = file_with("split.mg", "edge 1 1\nedge 2 1\n");
  CHECK(run("dist " + split + " 1@0 2@0").output == "inf\n");
}

TEST_CASE("cli: geodesic prints the segment walk") {
  const auto triangle = file_with("triangle.mg", kTriangle);
  const RunResult r = run("geodesic " + triangle + " c@0 c@4");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "length 3\nb 2 0\na 1 0\n");
  const auto split = file_with("split.mg", "edge 1 1\nedge 2 1\n");
  CHECK(run("geodesic " + split + " 1@0 2@0").output == "inf\n");
}

TEST_CASE("cli: subdivide emits the child graph file") {
  const auto interval = file_with("interval.mg", "edge a 5\n");
  const RunResult r = run("subdivide " + interval + " a@2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "edge ap1 2\nedge ap2 3\nglue ap1:1 ap2:0\n");
}

TEST_CASE("cli: rewire and cut transform the relation") {
  const auto fig8 = file_with("fig8.mg", kFigure8);
  const auto cycle_rel = file_with("cycle.rel", "glue 1:0 2:1\nglue 1:1 2:0\n");
  const RunResult rewired = run("rewire " + fig8 + " " + cycle_rel);
  CHECK(rewired.exit_code == 0);
  CHECK(rewired.output == kCycle);

  const auto loops_rel = file_with("loops.rel", "glue 1:0 1:1\nglue 2:0 2:1\n");
  const RunResult cut = run("cut " + fig8 + " " + loops_rel);
  CHECK(cut.exit_code == 0);
  CHECK(cut.output == "# cut non-trivial\n" + kTwoLoops);

  // Cutting the two-loops graph by the figure-8 relation is not a refinement.
  const auto loops = file_with("loops.mg", kTwoLoops);
  const auto fig8_rel = file_with("fig8.rel", "glue 1:0 1:1\nglue 1:1 2:0\nglue 2:0 2:1\n");
  CHECK(run("cut " + loops + " " + fig8_rel).exit_code == 1);
}

TEST_CASE("cli: primitive and equiv") {
  const auto path = file_with("path23.mg", "edge 1 2\nedge 2 3\nglue 1:1 2:0\n");
  CHECK(run("primitive " + path).output == "edge 1 5\n");
  const auto interval = file_with("interval5.mg", "edge z 5\n");
  CHECK(run("equiv " + path + " " + interval).output == "yes\n");
  const auto loop = file_with("loop5.mg", "edge z 5\nglue z:0 z:1\n");
  CHECK(run("equiv " + path + " " + loop).output == "no\n");
}

TEST_CASE("cli: op intersect, union, complement") {
  const auto cycle = file_with("cycle.mg", kCycle);
  const auto loops = file_with("loops.mg", kTwoLoops);
  CHECK(run("op intersect " + cycle + " " + loops).output == "edge 1 1\nedge 2 2\n");
  CHECK(run("op union " + cycle + " " + loops).output == kFigure8);
  const auto lasso = file_with("lasso.mg", "edge 1 1\nedge 2 2\nglue 1:0 1:1\nglue 1:0 2:0\n");
  CHECK(run("op complement " + lasso).output == kFigure8);
  CHECK(run("op complement " + loops + " " + cycle).output == kCycle);
}

TEST_CASE("cli: check-function reports witnesses") {
  const auto path = file_with("path.mg", "edge 1 1\nedge 2 1\nglue 1:1 2:0\n");
  const auto jump = file_with("jump.fn", "piece 1 0\npiece 2 1\n");
  const RunResult r = run("check-function " + path + " " + jump);
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "continuous no\n"
        "vertex {1:1 2:0}\n"
        "value 1:1 0\n"
        "value 2:0 1\n");

  const auto kink = file_with("kink.fn", "piece 1 0 1\npiece 2 1 -1\n");
  CHECK(run("check-function " + path + " " + kink).output == "continuous yes\n");
  const RunResult ck = run("check-function " + path + " " + kink + " --k 1");
  CHECK(ck.output ==
        "ck 1 no\n"
        "order 1\n"
        "vertex {1:1 2:0}\n"
        "value 1:1 1\n"
        "value 2:0 -1\n");
}

TEST_CASE("cli: norm prints exact powers and the floating norm") {
  const auto interval = file_with("unit.mg", "edge a 1\n");
  const auto linear = file_with("linear.fn", "piece a 0 1\n");
  const RunResult r = run("norm " + interval + " " + linear + " --p 2 --k 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "h 0 power 1/3\nh 1 power 1\nnorm 1.5773502691896257\n");
  CHECK(run("norm " + interval + " " + linear + " --p inf").output ==
        "h 0 sup 1\nnorm 1\n");
  // Membership violation surfaces as a domain error.
  const auto path = file_with("path.mg", "edge 1 1\nedge 2 1\nglue 1:1 2:0\n");
  const auto kink = file_with("kink.fn", "piece 1 0 1\npiece 2 1 -1\n");
  CHECK(run("norm " + path + " " + kink + " --p 2 --k 2").exit_code == 1);
}

TEST_CASE("cli: exit codes distinguish domain and parse problems") {
  const auto bad_syntax = file_with("bad.mg", "edge a x\n");
  CHECK(run("info " + bad_syntax).exit_code == 2);
  const auto bad_length = file_with("neg.mg", "edge a -1\n");
  CHECK(run("info " + bad_length).exit_code == 1);
  CHECK(run("info " + scratch_dir().string() + "/absent.mg").exit_code == 1);
  const auto ok = file_with("ok.mg", "edge a 1\n");
  CHECK(run("dist " + ok + " a@0 a@oops").exit_code == 2);
  CHECK(run("dist " + ok + " a@0 a@7").exit_code == 1);  // out of range
  CHECK(run("nosuchcommand").exit_code == 2);
}

TEST_CASE("cli: output bytes are identical across two runs") {
  const auto fig8 = file_with("fig8.mg", kFigure8);
  const RunResult a = run("op complement " + fig8);
  const RunResult b = run("op complement " + fig8);
  CHECK(a.output == b.output);
  const RunResult c = run("info " + fig8);
  const RunResult d = run("info " + fig8);
  CHECK(c.output == d.output);
}
