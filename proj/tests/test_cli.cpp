// Copyright 2026 The liechord Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string cli_path() {
  const char* path = std::getenv("LIECHORD_CLI");
  REQUIRE_MESSAGE(path != nullptr, "LIECHORD_CLI must point at the binary");
  return path;
}

// Runs the CLI with stderr folded into stdout unless told otherwise.
RunResult run(const std::string& args, bool merge_stderr = true) {
  const std::string cmd =
      cli_path() + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::string temp_dir() {
  static std::string dir = [] {
    char tmpl[] = "/tmp/liechord_cli_XXXXXX";
    return std::string(mkdtemp(tmpl));
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const std::string path = temp_dir() + "/" + name;
  std::ofstream out(path);
  out << text;
  return path;
}

std::string sl2_path() {
  static std::string path = [] {
    const std::string p = temp_dir() + "/sl2.json";
    REQUIRE(run("new --family sl --param 2 --out " + p).exit_code == 0);
    return p;
  }();
  return path;
}

std::string sl3_path() {
  static std::string path = [] {
    const std::string p = temp_dir() + "/sl3.json";
    REQUIRE(run("new --family sl --param 3 --out " + p).exit_code == 0);
    return p;
  }();
  return path;
}

}  // namespace

TEST_CASE("bound") {
  CHECK(run("bound --dim 1").out == "9\n");
  CHECK(run("bound --dim 2").out == "10546875/2\n");
  CHECK(run("bound --dim 2 --floor").out == "5273437\n");
}

TEST_CASE("new, validate, killing, theta, semisimple") {
  const std::string sl2 = sl2_path();
  CHECK(run("validate --algebra " + sl2).out == "valid\n");
  CHECK(run("killing --algebra " + sl2).out ==
        "[[\"8\",\"0\",\"0\"],[\"0\",\"0\",\"4\"],[\"0\",\"4\",\"0\"]]\n");
  CHECK(run("theta --algebra " + sl2).out ==
        "[[\"1/8\",\"0\",\"0\"],[\"0\",\"0\",\"1/4\"],[\"0\",\"1/4\",\"0\"]]\n");
  const RunResult ss = run("semisimple --algebra " + sl2);
  CHECK(ss.exit_code == 0);
  CHECK(ss.out == "true\n");

  const std::string abelian = write_file("abelian.json", "{\"n\": 2, \"mu\": []}");
  const RunResult flat = run("semisimple --algebra " + abelian);
  CHECK(flat.exit_code == 3);
  CHECK(flat.out == "false\n");
}

TEST_CASE("scrambled algebras stay equivalent") {
  const std::string moved = temp_dir() + "/sl2_moved.json";
  CHECK(run("new --family sl --param 2 --scramble --seed 7 --out " + moved).exit_code == 0);
  CHECK(run("new --family sl --param 2 --scramble --seed 7 --out " + moved).exit_code == 0);
  const RunResult cmp = run("compare " + sl2_path() + " " + moved + " --max-chords 2");
  CHECK(cmp.exit_code == 0);
  CHECK(cmp.out == "verdict: equal-up-to 2\n");
}

TEST_CASE("diagrams listing") {
  CHECK(run("diagrams --chords 2").out == "1-2,3-4\n1-3,2-4\n");
  CHECK(run("diagrams --chords 2 --symmetry none").out ==
        "1-2,3-4\n1-3,2-4\n1-4,2-3\n");
  CHECK(run("diagrams --chords 1 --symmetry dihedral").out == "1-2\n");
}

TEST_CASE("eval in both modes") {
  CHECK(run("eval --algebra " + sl2_path() + " --diagram 1-3,2-4").out == "3/2\n");
  CHECK(run("eval --algebra " + sl2_path() + " --diagram 1-3,2-4 --mode float").out ==
        "1.5\n");
  CHECK(run("eval --algebra " + sl2_path() + " --diagram 1-2").out == "3\n");
}

TEST_CASE("invariants CSV with quoting, deterministic across runs") {
  const std::string args = "invariants --algebra " + sl2_path() + " --max-chords 2";
  const RunResult first = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out ==
        "diagram,value\n\"1-2\",3\n\"1-2,3-4\",3\n\"1-3,2-4\",3/2\n");
  CHECK(run(args).out == first.out);
  CHECK(run(args + " --jobs 3").out == first.out);
}

TEST_CASE("compare verdicts and exit codes") {
  const RunResult distinct =
      run("compare " + sl2_path() + " " + sl3_path() + " --max-chords 1");
  CHECK(distinct.exit_code == 1);
  CHECK(distinct.out == "verdict: distinct\nwitness: 1-2\na: 3\nb: 8\n");

  const RunResult equal =
      run("compare " + sl2_path() + " " + sl2_path() + " --max-chords 2");
  CHECK(equal.exit_code == 0);
  CHECK(equal.out == "verdict: equal-up-to 2\n");
}

TEST_CASE("reduce prints combinations and verifies them") {
  const std::string picture = write_file(
      "one_chord.json",
      "{\"mu_nodes\": 2, \"theta_nodes\": 1, \"edges\": ["
      "[1, \"out\", 2, \"in2\"], [2, \"out\", 1, \"in2\"],"
      "[1, \"p1\", 1, \"in1\"], [1, \"p2\", 2, \"in1\"]]}");
  CHECK(run("reduce --picture " + picture).out == "1 * 1-2\n");
  const RunResult verified =
      run("reduce --picture " + picture + " --verify " + sl2_path());
  CHECK(verified.exit_code == 0);
  CHECK(verified.out == "1 * 1-2\nverify: ok 3\n");
}

TEST_CASE("so and sp families build, validate and evaluate through files") {
  const std::string so5 = temp_dir() + "/so5.json";
  const std::string sp4 = temp_dir() + "/sp4.json";
  REQUIRE(run("new --family so --param 5 --out " + so5).exit_code == 0);
  REQUIRE(run("new --family sp --param 4 --out " + sp4).exit_code == 0);
  CHECK(run("validate --algebra " + so5).out == "valid\n");
  CHECK(run("eval --algebra " + so5 + " --diagram 1-2").out == "10\n");
  CHECK(run("eval --algebra " + sp4 + " --diagram 1-2").out == "10\n");
  const RunResult cmp =
      run("compare " + so5 + " " + sp4 + " --max-chords 2 --float-prescreen");
  CHECK(cmp.exit_code == 0);
  CHECK(cmp.out == "verdict: equal-up-to 2\n");
}

TEST_CASE("scramble output is byte-identical for one seed, different across seeds") {
  const RunResult a = run("new --family sl --param 3 --scramble --seed 11");
  const RunResult b = run("new --family sl --param 3 --scramble --seed 11");
  const RunResult c = run("new --family sl --param 3 --scramble --seed 12");
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
}

TEST_CASE("float CSV uses decimal values") {
  const RunResult r =
      run("invariants --algebra " + sl2_path() + " --max-chords 2 --mode float");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "diagram,value\n\"1-2\",3\n\"1-2,3-4\",3\n\"1-3,2-4\",1.5\n");
}

TEST_CASE("validate reports Jacobi violations from a well-formed file") {
  const std::string bad = write_file(
      "jacobi_bad.json",
      "{\"n\": 3, \"mu\": [[1, 2, 2, \"1\"], [2, 3, 3, \"1\"]]}");
  const RunResult r = run("validate --algebra " + bad);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("jacobi (1,2,3,3)") != std::string::npos);
}

TEST_CASE("picture edges may be written sink-first; invalid pictures fail reduce") {
  const std::string flipped = write_file(
      "one_chord_flipped.json",
      "{\"mu_nodes\": 2, \"theta_nodes\": 1, \"edges\": ["
      "[2, \"in2\", 1, \"out\"], [1, \"in2\", 2, \"out\"],"
      "[1, \"in1\", 1, \"p1\"], [2, \"in1\", 1, \"p2\"]]}");
  CHECK(run("reduce --picture " + flipped).out == "1 * 1-2\n");

  const std::string open = write_file(
      "open_port.json",
      "{\"mu_nodes\": 2, \"theta_nodes\": 1, \"edges\": ["
      "[1, \"out\", 2, \"in2\"], [2, \"out\", 1, \"in2\"],"
      "[1, \"p1\", 1, \"in1\"]]}");
  CHECK(run("reduce --picture " + open).exit_code == 2);
}

TEST_CASE("reduce handles disconnected pictures as products") {
  const std::string two = write_file(
      "two_chords.json",
      "{\"mu_nodes\": 4, \"theta_nodes\": 2, \"edges\": ["
      "[1, \"out\", 2, \"in2\"], [2, \"out\", 1, \"in2\"],"
      "[3, \"out\", 4, \"in2\"], [4, \"out\", 3, \"in2\"],"
      "[1, \"p1\", 1, \"in1\"], [1, \"p2\", 2, \"in1\"],"
      "[2, \"p1\", 3, \"in1\"], [2, \"p2\", 4, \"in1\"]]}");
  const RunResult r = run("reduce --picture " + two + " --verify " + sl2_path());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 * 1-2 * 1-2\nverify: ok 9\n");
}

TEST_CASE("errors are one line on stderr with the documented exit codes") {
  const RunResult missing = run("eval --algebra /nonexistent.json --diagram 1-2");
  CHECK(missing.exit_code == 2);
  CHECK(missing.out.substr(0, 7) == "error: ");
  CHECK(missing.out.find('\n') == missing.out.size() - 1);

  const RunResult quiet =
      run("eval --algebra /nonexistent.json --diagram 1-2", false);
  CHECK(quiet.out.empty());  // the reason goes to stderr, not stdout

  const RunResult usage = run("frobnicate");
  CHECK(usage.exit_code == 2);

  const std::string abelian = write_file("abelian2.json", "{\"n\": 2, \"mu\": []}");
  CHECK(run("theta --algebra " + abelian).exit_code == 3);
  CHECK(run("new --family so --param 2 --out /dev/null").exit_code == 3);

  const std::string bad = write_file("bad.json", "{\"n\": 2, \"mu\": [[2, 1, 1, \"1\"]]}");
  CHECK(run("validate --algebra " + bad).exit_code == 2);
}
