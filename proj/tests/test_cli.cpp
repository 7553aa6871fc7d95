// Copyright 2026 The Authors.
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "cli.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = cgeo::cli::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::filesystem::path& scratch_dir() {
  static const std::filesystem::path dir = [] {
    std::filesystem::path p =
        std::filesystem::temp_directory_path() / "cgeo_cli_scratch";
    std::filesystem::create_directories(p);
    return p;
  }();
  return dir;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::filesystem::path p = scratch_dir() / name;
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << content;
  out.close();
  return p.string();
}

std::string interval3_file() {
  return write_temp("interval3.txt",
                    "ground: [1, 2, 3]\n"
                    "closed: [[], [1], [2], [3], [1, 2], [2, 3], [1, 2, 3]]\n");
}

std::string left_line_file() {
  return write_temp("left.txt",
                    "ground: [1, 2]\n"
                    "closed: [[], [1], [1, 2]]\n");
}

std::string right_line_file() {
  return write_temp("right.txt",
                    "ground: [1, 2]\n"
                    "closed: [[], [2], [1, 2]]\n");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);  // missing file argument
  CHECK(run({"--format", "yaml", "check", "x"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  CliResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("check") != std::string::npos);
}

TEST_CASE("check accepts a geometry") {
  CliResult r = run({"check", interval3_file()});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: convex-geometry") != std::string::npos);
  CHECK(r.out.find("aep: true") != std::string::npos);
}

TEST_CASE("check rejects a non-geometry closure system with a witness") {
  std::string path = write_temp("degenerate.txt",
                                "ground: [1, 2]\n"
                                "closed: [[], [1, 2]]\n");
  CliResult r = run({"check", path});
  CHECK(r.code == 1);
  CHECK(r.out.find("verdict: not-a-convex-geometry") != std::string::npos);
  CHECK(r.out.find("witness: {a: [], x: 1, y: 2}") != std::string::npos);
}

TEST_CASE("check rejects families that are not closure systems") {
  std::string no_full = write_temp("no_full.txt",
                                   "ground: [1, 2]\n"
                                   "closed: [[], [1]]\n");
  CliResult r1 = run({"check", no_full});
  CHECK(r1.code == 1);
  CHECK(r1.out.find("reason: missing-full-set") != std::string::npos);

  std::string no_zero = write_temp("no_zero.txt",
                                   "ground: [1, 2]\n"
                                   "closed: [[1], [1, 2]]\n");
  CliResult r2 = run({"check", no_zero});
  CHECK(r2.code == 1);
  CHECK(r2.out.find("reason: missing-empty-set") != std::string::npos);

  std::string unstable = write_temp("unstable.txt",
                                    "ground: [1, 2, 3]\n"
                                    "closed: [[], [1, 2], [2, 3], [1, 2, 3]]\n");
  CliResult r3 = run({"check", unstable});
  CHECK(r3.code == 1);
  CHECK(r3.out.find("reason: not-intersection-stable") != std::string::npos);
  CHECK(r3.out.find("witness: {a: [1, 2], b: [2, 3]}") != std::string::npos);
}

TEST_CASE("malformed and missing inputs exit with code 2") {
  std::string bad = write_temp("bad.txt", "ground [1, 2]\n");
  CliResult r = run({"check", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
  CHECK(run({"check", (scratch_dir() / "absent.txt").string()}).code == 2);
}

TEST_CASE("closure computes the enclosing intersection") {
  CliResult r = run({"closure", left_line_file(), "2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "ground: [1, 2]\n"
        "set: [1, 2]\n");
  CliResult empty = run({"closure", left_line_file()});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("set: []") != std::string::npos);
  CHECK(run({"closure", left_line_file(), "7"}).code == 2);
}

TEST_CASE("meet prints the result and its rejection") {
  CliResult r = run({"meet", left_line_file(), right_line_file()});
  CHECK(r.code == 1);
  CHECK(r.out.find("closed: [[], [1, 2]]") != std::string::npos);
  CHECK(r.out.find("\n\n") != std::string::npos);  // two documents
  CHECK(r.out.find("verdict: not-a-convex-geometry") != std::string::npos);
}

TEST_CASE("join prints the result and its acceptance") {
  CliResult r = run({"join", left_line_file(), right_line_file()});
  CHECK(r.code == 0);
  CHECK(r.out.find("closed: [[], [1], [2], [1, 2]]") != std::string::npos);
  CHECK(r.out.find("verdict: convex-geometry") != std::string::npos);
}

TEST_CASE("meet refuses mismatched grounds") {
  std::string other = write_temp("other_ground.txt",
                                 "ground: [a, b]\n"
                                 "closed: [[], [a], [a, b]]\n");
  CHECK(run({"meet", left_line_file(), other}).code == 2);
}

TEST_CASE("chains lists the cover paths") {
  CliResult r = run({"chains", interval3_file()});
  CHECK(r.code == 0);
  CHECK(r.out.find("chains: [[[], [1], [1, 2], [1, 2, 3]],") !=
        std::string::npos);
}

TEST_CASE("chains enforces the output limit") {
  CHECK(run({"chains", interval3_file(), "--limit", "3"}).code == 2);
}

TEST_CASE("orders lists the compatible orders") {
  CliResult r = run({"orders", interval3_file()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "ground: [1, 2, 3]\n"
        "orders: [[1, 2, 3], [2, 1, 3], [2, 3, 1], [3, 2, 1]]\n");
}

TEST_CASE("orders rejects non-geometries with the recognition document") {
  std::string path = write_temp("degenerate2.txt",
                                "ground: [1, 2]\n"
                                "closed: [[], [1, 2]]\n");
  CliResult r = run({"orders", path});
  CHECK(r.code == 1);
  CHECK(r.out.find("not-a-convex-geometry") != std::string::npos);
}

TEST_CASE("decompose emits a verified order list") {
  CliResult all = run({"decompose", interval3_file()});
  CHECK(all.code == 0);
  CHECK(all.out ==
        "ground: [1, 2, 3]\n"
        "orders: [[1, 2, 3], [2, 1, 3], [2, 3, 1], [3, 2, 1]]\n"
        "verified: true\n");
  CliResult witness =
      run({"decompose", interval3_file(), "--mode", "witness-per-set"});
  CHECK(witness.code == 0);
  CHECK(witness.out.find("verified: true") != std::string::npos);
}

TEST_CASE("mincover finds the two monotone orders") {
  for (const char* mode : {"exact", "greedy"}) {
    CliResult r = run({"mincover", interval3_file(), "--mode", mode});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "ground: [1, 2, 3]\n"
          "orders: [[1, 2, 3], [3, 2, 1]]\n"
          "verified: true\n");
  }
}

TEST_CASE("random is reproducible and emits a genuine geometry") {
  CliResult a = run({"random", "--n", "4", "--k", "2", "--seed", "9"});
  CliResult b = run({"random", "--n", "4", "--k", "2", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::string path = write_temp("random_out.txt", a.out);
  CHECK(run({"check", path}).code == 0);
}

TEST_CASE("symbolic-demo pins the infinite counterexample") {
  CliResult r = run({"symbolic-demo", "--limit", "500", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("singleton_closure: X") != std::string::npos);
  CHECK(r.out.find("deleted: N") != std::string::npos);
  CHECK(r.out.find("gap: x") != std::string::npos);
  CHECK(r.out.find("violations: 0") != std::string::npos);
  CHECK(r.out.find("trials: 500") != std::string::npos);
}

TEST_CASE("verify runs the battery and reports per criterion") {
  CliResult r = run({"verify", "--max-n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS  1 characterization-equivalence") !=
        std::string::npos);
  CHECK(r.out.find("PASS 11 determinism") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("json output flavor is selectable") {
  CliResult r = run({"--format", "json-like", "check", interval3_file()});
  CHECK(r.code == 0);
  REQUIRE(!r.out.empty());
  CHECK(r.out.front() == '{');
  CHECK(r.out.find("\"verdict\": \"convex-geometry\"") != std::string::npos);
}

TEST_CASE("guard refusals exit with code 2") {
  std::ostringstream doc;
  doc << "ground: [";
  for (int i = 1; i <= 11; ++i) doc << (i > 1 ? ", " : "") << i;
  doc << "]\nclosed: [[], [";
  for (int i = 1; i <= 11; ++i) doc << (i > 1 ? ", " : "") << i;
  doc << "]]\n";
  std::string path = write_temp("wide.txt", doc.str());
  CHECK(run({"chains", path}).code == 2);
}

}  // namespace
