#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(DQUOT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string scratch(const std::string& name) { return std::string(DQUOT_SCRATCH) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("sing \"x^3+y^3\"").code == 0);
  CHECK(run("--bogus").code == 2);
  CHECK(run("sing 0").code == 2);
  CHECK(run("sing \"1+x\"").code == 2);
  CHECK(run("dq-cohomology /nonexistent.json --vertices 1").code == 2);
  std::ofstream(scratch("cli_bad.json")) << "{\"vertices\": 3, ";
  CHECK(run("dq-cohomology " + scratch("cli_bad.json") + " --vertices 1").code == 2);
  CHECK(run("dq-cohomology data/quiver_3vertex.json --vertices 1,7").code == 2);
  CHECK(run("dq-cohomology data/quiver_3vertex.json --vertices 1,2 --window 0..2").code == 2);
  // a free loop has infinitely many paths
  std::ofstream(scratch("cli_loop.json")) << R"({"vertices": 2, "arrows": [{"name": "a", "from": 1, "to": 1}], "relations": []})";
  CHECK(run("contraction " + scratch("cli_loop.json") + " --vertices 2").code == 3);
  CHECK(run("dq-cohomology " + scratch("cli_loop.json") + " --vertices 1").code == 3);
  CHECK(run("stable-ext data/mf_x2.json --schedule 4").code == 3);
  CHECK(run("crosscheck --n 3 --m 1").code == 0);
  CHECK(run("crosscheck --n 3 --m 5").code == 2);
  std::ofstream(scratch("cli_badmf.json")) << R"({"variables": ["x", "y"], "sigma": "x*y", "phi": [["x"]], "psi": [["x"]]})";
  CHECK(run("stable-ext " + scratch("cli_badmf.json")).code == 2);
  std::ofstream(scratch("cli_noniso.json")) << R"({"variables": ["x", "y"], "sigma": "x^2", "phi": [["x"]], "psi": [["x"]]})";
  CHECK(run("stable-ext " + scratch("cli_noniso.json")).code == 3);
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t m = 1; m <= n; ++m)
      CHECK(run("stable-ext data/artinian/mf_n" + std::to_string(n) + "_m" + std::to_string(m) + ".json").code == 0);
}

TEST_CASE("human output") {
  auto r = run("dq-cohomology data/quiver_3vertex.json --vertices 1,2 --window -2..0");
  CHECK(r.code == 0);
  CHECK(r.out.find("dim A = 9") != std::string::npos);
  auto c = run("contraction data/flop_cA2.json --vertices 1");
  CHECK(c.out.find("dim 3") != std::string::npos);
  CHECK(c.out.find("n^3 = 0") != std::string::npos);
  auto eta = run("dq-cohomology data/end_n3_m1.json --idempotent 1,0,0,0,0,0 --window -6..0 --normalized --eta");
  CHECK(eta.code == 0);
  CHECK(eta.out.find("eta: found") != std::string::npos);
  auto s = run("sing \"x^2*y\"");
  CHECK(s.code == 0);
  CHECK(s.out.find("warning:") != std::string::npos);
}

TEST_CASE("JSON reports are deterministic") {
  for (std::string args : {"stable-ext data/mf_node.json --window -2..2", "sing \"x^4+y^5+x^2*y^3\"",
                           "dq-cohomology data/quiver_3vertex.json --vertices 1,2 --window -3..0 --hh0",
                           "crosscheck --n 4 --m 1 --window -3..0"}) {
    CAPTURE(args);
    REQUIRE(run("--json " + scratch("cli_a.json") + " " + args).code == 0);
    REQUIRE(run(args + " --json " + scratch("cli_b.json")).code == 0);
    std::string a = slurp(scratch("cli_a.json")), b = slurp(scratch("cli_b.json"));
    CHECK(!a.empty());
    CHECK(a.find("\"input_digest\"") != std::string::npos);
    CHECK(a.find("wall_time") == std::string::npos);
    // the command echo differs by argument order; everything after it must match
    CHECK(a.substr(a.find("\"input_digest\"")) == b.substr(b.find("\"input_digest\"")));
  }
  // byte-identical for identical command lines
  REQUIRE(run("--json " + scratch("cli_a.json") + " stable-ext data/mf_a2_surface.json").code == 0);
  REQUIRE(run("--json " + scratch("cli_b.json") + " stable-ext data/mf_a2_surface.json").code == 0);
  auto a = slurp(scratch("cli_a.json")), b = slurp(scratch("cli_b.json"));
  CHECK(a.substr(a.find("\"input_digest\"")) == b.substr(b.find("\"input_digest\"")));
  REQUIRE(run("--json " + scratch("cli_a.json") + " --timing sing x^3").code == 0);
  CHECK(slurp(scratch("cli_a.json")).find("wall_time_s") != std::string::npos);
}

TEST_CASE("warnings reach the JSON report") {
  REQUIRE(run("--json " + scratch("cli_w.json") + " dq-cohomology data/quiver_3vertex.json --vertices 1,2 --window -3..0 --hh0").code == 0);
  auto text = slurp(scratch("cli_w.json"));
  CHECK(text.find("experimental") != std::string::npos);
  auto warnings = text.substr(text.find("\"warnings\""));
  CHECK(warnings.find("HH^0") != std::string::npos);
}
