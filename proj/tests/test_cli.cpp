// Copyright 2026 The squarecodes Authors
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

#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sqc/cli.hpp"
#include "sqc/families.hpp"
#include "sqc/json_io.hpp"
#include "support.hpp"

using namespace sqc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(SQC_FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("sqc_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_set(const std::filesystem::path& dir, const std::string& name, const MonomialSet& a) {
  const auto path = (dir / name).string();
  std::ofstream(path) << to_json(a).dump() << '\n';
  return path;
}

}  // namespace

TEST_CASE("construct") {
  const auto hyp = run({"construct", "--family", "hyp", "--q", "11", "--m", "2", "--d", "6"});
  REQUIRE(hyp.code == 0);
  CHECK(parse_json(hyp.out)["exponents"].size() == 111);

  const auto rm = run({"construct", "--family", "rm", "--q", "11", "--m", "2", "--s", "0"});
  REQUIRE(rm.code == 0);
  CHECK(rm.out == "{\"q\":11,\"m\":2,\"exponents\":[[0,0]]}\n");

  const auto half = run({"construct", "--family", "halfhyp", "--q", "11", "--m", "2", "--d", "12"});
  REQUIRE(half.code == 0);
  CHECK(parse_json(half.out)["exponents"].size() == 24);

  const auto wrm = run({"construct", "--family", "wrm", "--q", "11", "--s", "15", "--weights", "5,3"});
  REQUIRE(wrm.code == 0);
  CHECK(parse_json(wrm.out)["exponents"].size() == 13);

  const auto b2 = run({"construct", "--family", "wrm-even-b2", "--q", "11", "--d", "6", "--format", "text"});
  REQUIRE(b2.code == 0);
  CHECK(b2.out.rfind("q=11 m=2 size=39\n", 0) == 0);

  const auto file = run({"construct", "--family", "file", "--file", fixture("hyp_11_6.json")});
  REQUIRE(file.code == 0);
  CHECK(file.out == hyp.out);
}

TEST_CASE("invalid input exits with 2") {
  CHECK(run({"construct", "--family", "halfhyp", "--q", "11", "--d", "121"}).code == 2);
  CHECK(run({"construct", "--family", "wrm-even-b1", "--q", "11", "--d", "5"}).code == 2);
  CHECK(run({"construct", "--family", "rm", "--q", "10", "--s", "2"}).code == 2);
  CHECK(run({"construct", "--family", "rm", "--q", "11", "--s", "2.5"}).code == 2);
  CHECK(run({"construct", "--family", "wrm", "--q", "11", "--s", "0.5", "--weights", "1,1"}).code == 2);
  CHECK(run({"construct", "--family", "nope", "--q", "11"}).code == 2);
  CHECK(run({"construct", "--family", "hyp", "--q", "11"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"compare", "--q", "11", "--d", "121"}).code == 2);
  const auto bad = run({"construct", "--family", "halfhyp", "--q", "11", "--d", "121"});
  CHECK(bad.err.find("InvalidOrder") != std::string::npos);
}

TEST_CASE("params and certify") {
  const auto p = run({"params", "--family", "hyp", "--q", "11", "--d", "55", "--format", "csv"});
  REQUIRE(p.code == 0);
  CHECK(p.out == "family,q,m,d_design,n,k,fb,d_exact,d_source,square_fb\nhyp,11,2,55,121,30,55,55,certificate,8\n");

  const auto j = parse_json(run({"params", "--family", "halfhyp", "--q", "11", "--d", "6"}).out);
  CHECK(j["k"] == 31);
  CHECK(j["d_exact"] == 49);
  CHECK(j["certificate"]["kind"] == "box");
  CHECK(j["square"]["fb"].get<int>() >= 6);

  const auto c = parse_json(run({"certify", "--family", "wrm", "--q", "11", "--s", "15", "--weights", "5,3"}).out);
  CHECK(c["exact"] == true);
  CHECK(c["d"] == 66);
  CHECK(c["certificate"]["weight"] == 66);
}

TEST_CASE("budget") {
  const auto over = run({"params", "--family", "rm", "--q", "5", "--s", "3", "--effort", "exhaustive", "--budget", "10"});
  CHECK(over.code == 3);
  CHECK(over.err.find("BudgetExceeded") != std::string::npos);
  ::setenv("SQC_BUDGET", "10", 1);
  CHECK(run({"params", "--family", "rm", "--q", "5", "--s", "3", "--effort", "exhaustive"}).code == 3);
  CHECK(run({"params", "--family", "rm", "--q", "5", "--s", "6", "--effort", "exhaustive", "--budget", "100000"}).code == 0);
  ::unsetenv("SQC_BUDGET");
}

TEST_CASE("output is identical across thread counts") {
  std::string first;
  for (const char* threads : {"1", "2", "4", "7"}) {
    const auto r = run({"params", "--family", "rm", "--q", "4", "--s", "3", "--effort", "exhaustive", "--threads", threads});
    REQUIRE(r.code == 0);
    if (first.empty()) first = r.out;
    CHECK(r.out == first);
  }
  CHECK(run({"table", "--threads", "1"}).out == run({"table", "--threads", "3"}).out);
}

TEST_CASE("verify") {
  const auto pass = run({"verify", "--a", fixture("halfhyp_11_6.json"), "--hyp", "6"});
  CHECK(pass.code == 0);
  CHECK(pass.out.rfind("pass", 0) == 0);
  CHECK(run({"verify", "--a", fixture("halfhyp_11_6.json"), "--b", fixture("hyp_11_6.json")}).code == 0);

  const auto dir = scratch_dir();
  const auto box = write_set(dir, "box.json", full_box(11, 2));
  CHECK(run({"verify", "--a", box, "--b", box}).code == 0);

  const auto fail = run({"verify", "--family", "hyp", "--q", "11", "--d", "6", "--hyp", "6"});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("violation") != std::string::npos);

  const auto region = run({"verify", "--region", fixture("region_halfhyp_11_6.json"), "--q", "11", "--hyp", "6", "--format", "json"});
  REQUIRE(region.code == 0);
  const auto rj = parse_json(region.out);
  CHECK(rj["algorithm1"] == true);
  CHECK(rj["k"] == 31);

  CHECK(run({"verify", "--a", box, "--b", fixture("hyp_11_6.json"), "--region", fixture("region_halfhyp_11_6.json")}).code == 1);
  const auto mismatch = write_set(dir, "q5.json", full_box(5, 2));
  CHECK(run({"verify", "--a", mismatch, "--b", box}).code == 2);
  CHECK(run({"verify", "--a", (dir / "missing.json").string(), "--b", box}).code == 2);
  std::ofstream(dir / "broken.json") << "{\"q\": 5, \"m\": 2, \"exponents\": [[1]]}";
  CHECK(run({"verify", "--a", (dir / "broken.json").string(), "--hyp", "3"}).code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify agrees with the library on random fixtures") {
  const auto dir = scratch_dir();
  testing::Rng rng(99);
  int passes = 0;
  for (int t = 0; t < 100; ++t) {
    const std::uint32_t q = std::vector<std::uint32_t>{3, 4, 5, 7, 11}[testing::uniform(rng, 0, 4)];
    const auto a = t % 2 ? testing::random_lower_set_2d(q, rng) : testing::random_set(q, 2, testing::uniform(rng, 1, 5), rng);
    const auto b = t % 3 ? hyperbolic_set(q, 2, testing::uniform(rng, 1, q)) : testing::random_set(q, 2, testing::uniform(rng, 1, q * q), rng);
    const auto ap = write_set(dir, "a" + std::to_string(t) + ".json", a);
    const auto bp = write_set(dir, "b" + std::to_string(t) + ".json", b);
    const bool expected = check_square_designed(a, b);
    passes += expected;
    REQUIRE(run({"verify", "--a", ap, "--b", bp}).code == (expected ? 0 : 1));
  }
  CHECK(passes >= 10);
  CHECK(passes <= 90);
  std::filesystem::remove_all(dir);
}

TEST_CASE("compare") {
  CHECK(run({"compare", "--q", "11", "--d", "6"}).out == slurp(fixture("compare_11_6.csv")));
  CHECK(run({"compare", "--q", "11", "--d", "12"}).out == slurp(fixture("compare_11_12.csv")));
  const auto d1 = run({"compare", "--q", "11", "--d", "1"}).out;
  CHECK(d1.find("halfhyp,11,2,1,121,36,") != std::string::npos);
  CHECK(d1.find("best-wrm,11,2,1,121,121,") != std::string::npos);
}

TEST_CASE("table matches the golden file") { CHECK(run({"table"}).out == slurp(fixture("reference_table.csv"))); }

TEST_CASE("square and matrix dump") {
  const auto dir = scratch_dir();
  const auto path = (dir / "g.txt").string();
  const auto sq = run({"square", "--family", "rm", "--q", "5", "--s", "1", "--dump-matrix", path});
  REQUIRE(sq.code == 0);
  CHECK(parse_json(sq.out)["exponents"].size() == 6);
  const auto dump = slurp(path);
  CHECK(std::count(dump.begin(), dump.end(), '\n') == 6);
  CHECK(dump.substr(0, dump.find('\n')) == "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1");
  std::filesystem::remove_all(dir);
}
