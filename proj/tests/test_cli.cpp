// End-to-end checks of the command-line surface: exit codes, golden
// comparison, and output determinism.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string data(const std::string& name) {
  return std::string(GC_DATA_DIR) + "/" + name;
}

RunResult run(const std::string& args) {
  std::string out_path = "/tmp/graphcurve_cli_out";
  std::string cmd = std::string(GC_CLI_PATH) + " " + args + " > " + out_path +
                    " 2> /dev/null";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(rc);
  std::ifstream in(out_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

TEST_CASE("validate: pass on the example, exit 2 on the triangle") {
  auto good = run("validate --graph " + data("ex44.json"));
  CHECK(good.exit_code == 0);
  CHECK(good.out.find("\"pass\": true") != std::string::npos);
  auto bad = run("validate --graph " + data("triangle.json"));
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("triangle") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
  write_file("/tmp/gc_bad.json", "{\"vertices\": 2");
  CHECK(run("validate --graph /tmp/gc_bad.json").exit_code == 2);
  CHECK(run("betti --graph /tmp/gc_bad.json").exit_code == 2);
  CHECK(run("betti --graph /tmp/does_not_exist.json").exit_code == 2);
}

TEST_CASE("betti: paper layout and golden match") {
  auto r = run("betti --graph " + data("ex44.json") + " --labeling " +
               data("fig5_labels.json") + " --golden " +
               data("ex44_curve_betti.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("total: 1 26 98 168 154 72 15 2") != std::string::npos);
  CHECK(r.out.find("golden: match") != std::string::npos);
}

TEST_CASE("betti: perturbed golden reports the offending cell") {
  std::string golden =
      R"({"betti": [[0,0,1],[1,2,26],[2,3,98],[3,4,168],[4,5,154],[5,6,70],[5,7,2],[6,7,8],[6,8,7],[7,9,3]]})";
  write_file("/tmp/gc_perturbed.json", golden);
  auto r = run("betti --graph " + data("ex44.json") + " --labeling " +
               data("fig5_labels.json") +
               " --golden /tmp/gc_perturbed.json --format json");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("mismatch") != std::string::npos);
  CHECK(r.out.find("beta(7,9) = 2, expected 3") != std::string::npos);
}

TEST_CASE("ideal: certificate passes and the golden set matches") {
  auto r = run("ideal --graph " + data("ex44.json") + " --labeling " +
               data("fig5_labels.json") + " --golden " +
               data("ex44_curve_gens.txt"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("certificate: PASS") != std::string::npos);
  CHECK(r.out.find("golden: match") != std::string::npos);
}

TEST_CASE("ideal: certificate failure exits 3") {
  auto r = run("ideal --graph " + data("triangle.json") +
               " --allow-violations");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("certificate: FAIL") != std::string::npos);
}

TEST_CASE("assumption violations require the override flag") {
  write_file("/tmp/gc_k4.json",
             R"({"vertices":10,"edges":[[0,4],[1,4],[0,5],[2,5],[0,6],[3,6],
                 [1,7],[2,7],[1,8],[3,8],[2,9],[3,9]]})");
  CHECK(run("ideal --graph /tmp/gc_k4.json").exit_code == 2);
  auto r = run("ideal --graph /tmp/gc_k4.json --allow-violations");
  CHECK(r.exit_code == 0);
}

TEST_CASE("secant: golden cubics and betti") {
  auto r = run("secant --graph " + data("ex44.json") + " --labeling " +
               data("fig5_labels.json") + " --golden " +
               data("ex44_secant_cubics.txt") + " --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"golden\": \"match\"") != std::string::npos);
  CHECK(r.out.find("\"degree\": 34") != std::string::npos);
}

TEST_CASE("secant: level too deep reports fills-ambient") {
  write_file("/tmp/gc_p3.json", R"({"vertices":3,"edges":[[0,1],[1,2]]})");
  auto r = run("secant --graph /tmp/gc_p3.json --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("fills ambient") != std::string::npos);
}

TEST_CASE("embed emits a labeling that can be fed back in") {
  auto r = run("embed --graph " + data("ex44.json") + " --format json");
  CHECK(r.exit_code == 0);
  write_file("/tmp/gc_roundtrip.json", r.out);
  auto again = run("betti --graph " + data("ex44.json") +
                   " --labeling /tmp/gc_roundtrip.json --format json");
  CHECK(again.exit_code == 0);
  CHECK(again.out.find("\"regularity\": 2") != std::string::npos);
}

TEST_CASE("survey is deterministic and parallel-stable") {
  std::string args = "survey --family random_valid --d 9 --g 1 --count 4 "
                     "--seed 11";
  auto a = run(args);
  auto b = run(args);
  auto c = run(args + " --jobs 3");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 4);
  CHECK(a.out.find("\"status\":\"PASS\"") != std::string::npos);
}

TEST_CASE("survey covers the named families") {
  CHECK(run("survey --family cycle --d 6").exit_code == 0);
  CHECK(run("survey --family path --d 5").exit_code == 0);
  CHECK(run("survey --family subdivided_K4 --s 1 --allow-violations")
            .exit_code == 0);
  CHECK(run("survey --family nonesuch --d 5").exit_code == 2);
}

TEST_CASE("rational mode reproduces the prime-field Betti table") {
  write_file("/tmp/gc_p4.json",
             R"({"vertices":4,"edges":[[0,1],[1,2],[2,3]]})");
  auto p = run("betti --graph /tmp/gc_p4.json --format json");
  auto q = run("betti --graph /tmp/gc_p4.json --format json --field 0");
  CHECK(p.exit_code == 0);
  CHECK(q.exit_code == 0);
  CHECK(p.out == q.out);
}

TEST_CASE("guardrail environment variables mark runs incomplete") {
  std::string cmd = "GRAPHCURVE_MAX_BASIS=3 " + std::string(GC_CLI_PATH) +
                    " betti --graph " + data("ex44.json") +
                    " > /tmp/gc_guard.out 2>/dev/null";
  int rc = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(rc) == 1);
}
