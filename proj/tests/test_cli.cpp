// Copyright 2026 The kronwalk Authors
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
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "kronwalk/cli.hpp"

using doctest::Approx;
using nlohmann::json;
namespace cli = kronwalk::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "kronwalk");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<double> split_reals(const std::string& line) {
  std::vector<double> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(std::stod(cell));
  return out;
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "kronwalk_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("real formatting") {
  CHECK(cli::format_real(0.25) == "0.25");
  CHECK(cli::format_real(0.1) == "0.10000000000000001");
  CHECK(cli::format_real(-3.0) == "-3");
  CHECK(std::stod(cli::format_real(std::numbers::pi)) == std::numbers::pi);
}

TEST_CASE("spectrum") {
  const Result r = invoke({"spectrum", "--initiator", "complete", "--M", "3", "--j", "2", "--marked", "0"});
  REQUIRE(r.code == cli::kExitSuccess);
  const json doc = json::parse(r.out);
  const json& entries = doc["kronecker"]["entries"];
  REQUIRE(entries.size() == 3);
  CHECK(entries[0]["multiplicity"] == 1);
  CHECK(entries[1]["multiplicity"] == 4);
  CHECK(entries[2]["multiplicity"] == 4);
  CHECK(entries[0]["value"].get<double>() == Approx(4.0));
  for (const char* key : {"value", "normalized", "multiplicity", "p", "a"}) CHECK(entries[0].contains(key));

  const Result one = invoke({"spectrum", "--initiator", "paley", "--M", "13", "--j", "1"});
  REQUIRE(one.code == 0);
  const json echo = json::parse(one.out);
  REQUIRE(echo["kronecker"]["entries"].size() == echo["initiator"]["classes"].size());
  for (std::size_t i = 0; i < echo["kronecker"]["entries"].size(); ++i)
    CHECK(echo["kronecker"]["entries"][i]["value"].get<double>() ==
          Approx(echo["initiator"]["classes"][i]["value"].get<double>()));

  const Result bad = invoke({"spectrum", "--initiator", "paley", "--M", "6", "--j", "1"});
  CHECK(bad.code == cli::kExitDomain);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("params") {
  const Result k17 =
      invoke({"params", "--initiator", "complete", "--M", "17", "--j", "4", "--gamma", "auto-asymptotic"});
  REQUIRE(k17.code == 0);
  CHECK(json::parse(k17.out)["gamma"].get<double>() == Approx(1.0 / std::pow(16.0, 4)));

  const Result paley = invoke({"params", "--initiator", "paley", "--M", "13", "--j", "3"});
  REQUIRE(paley.code == 0);
  const json p = json::parse(paley.out);
  CHECK(std::abs(p["t_star"].get<double>() - 73.627) <= 0.1 * 73.627);
  CHECK(p["gamma"].get<double>() * p["principal"].get<double>() == Approx(1.0 + p["r"].get<double>()));

  const Result knn = invoke({"params", "--initiator", "knn", "--n", "3", "--j", "1", "--shift", "optimal"});
  REQUIRE(knn.code == 0);
  const json k = json::parse(knn.out);
  CHECK(k["shift_a"].get<double>() == Approx(0.5));
  CHECK(k["shift_b"].get<double>() == Approx(1.5));
  CHECK(k["c_min"].get<double>() == Approx(1.0 / 3.0));

  const Result csv = invoke({"params", "--initiator", "cycle", "--M", "5", "--j", "2", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(lines(csv.out).front() == "key,value");
}

TEST_CASE("evolve") {
  const Result r = invoke({"evolve", "--initiator", "paley", "--M", "13", "--j", "3", "--gamma", "auto-asymptotic",
                           "--t-max", "150", "--dt", "0.05"});
  REQUIRE(r.code == 0);
  const std::vector<std::string> rows = lines(r.out);
  REQUIRE(rows.size() == 3002);
  CHECK(rows[0] == "t,probability");
  const std::vector<double> first = split_reals(rows[1]);
  CHECK(first[0] == 0.0);
  CHECK(first[1] == Approx(1.0 / 2197.0).epsilon(1e-10));
  double best_t = 0.0, best_p = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const std::vector<double> v = split_reals(rows[i]);
    if (v[1] > best_p) {
      best_p = v[1];
      best_t = v[0];
    }
  }
  CHECK(best_p >= 0.9);
  CHECK(std::abs(best_t - 73.627) <= 0.1 * 73.627);

  const Result p2 = invoke({"evolve", "--initiator", "path", "--M", "2", "--j", "4", "--t-max", "80"});
  REQUIRE(p2.code == 0);
  const std::vector<std::string> p2_rows = lines(p2.out);
  CHECK(p2_rows.size() == 2002);
  for (std::size_t i = 1; i < p2_rows.size(); ++i) CHECK(split_reals(p2_rows[i])[1] <= 2.0 / 16.0 + 1e-12);

  const Result as_json = invoke({"evolve", "--initiator", "cycle", "--M", "5", "--j", "2", "--format", "json"});
  REQUIRE(as_json.code == 0);
  const json doc = json::parse(as_json.out);
  CHECK(doc["times"].size() == 2001);
  CHECK(doc["times"].back().get<double>() == Approx(std::numbers::pi * 5.0));

  CHECK(invoke({"evolve", "--initiator", "path", "--M", "3", "--j", "2"}).code == cli::kExitUsage);
  CHECK(invoke({"evolve", "--initiator", "path", "--M", "3", "--j", "2", "--marked", "4"}).code == 0);
}

TEST_CASE("scaling") {
  const Result r = invoke({"scaling", "--initiator", "cycle", "--M", "5", "--j-min", "1", "--j-max", "8"});
  REQUIRE(r.code == 0);
  const std::vector<std::string> rows = lines(r.out);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0] == "j,N,gamma,t_peak,p_peak,t_star,p_at_pi_sqrtN_over_2,total");
  const std::vector<double> last = split_reals(rows[8]);
  CHECK(last[0] == 8);
  CHECK(last[1] == 390625);
  CHECK(last[6] > 0.99);

  CHECK(invoke({"scaling", "--initiator", "cycle", "--M", "5", "--j-min", "4", "--j-max", "2"}).code ==
        cli::kExitUsage);
  CHECK(invoke({"scaling", "--initiator", "cycle", "--M", "5", "--j-min", "1"}).code == cli::kExitUsage);
}

TEST_CASE("validate") {
  const Result k3 = invoke({"validate", "--initiator", "complete", "--M", "3", "--j", "2", "--gamma", "0.25",
                            "--t-max", "20", "--dt", "0.1"});
  REQUIRE(k3.code == 0);
  const json doc = json::parse(k3.out);
  CHECK(doc["max_abs_diff"].get<double>() <= 1e-8);
  CHECK(doc["samples"] == 201);

  const Result paley = invoke({"validate", "--initiator", "paley", "--M", "5", "--j", "3", "--dt", "0.1"});
  REQUIRE(paley.code == 0);
  CHECK(json::parse(paley.out)["max_abs_diff"].get<double>() <= 1e-8);

  const Result p2 = invoke({"validate", "--initiator", "path", "--M", "2", "--j", "3", "--t-max", "50", "--dt",
                            "0.1", "--format", "csv"});
  REQUIRE(p2.code == 0);
  CHECK(lines(p2.out)[0] == "initiator,j,N,gamma,t_max,dt,samples,max_abs_diff,pass");
  CHECK(lines(p2.out)[1].ends_with(",true"));

  const Result big = invoke({"validate", "--initiator", "complete", "--M", "5", "--j", "6"});
  CHECK(big.code == cli::kExitNumeric);
}

TEST_CASE("edge-list initiators and output files") {
  const fs::path dir = scratch_dir();
  const fs::path edges = dir / "triangle.txt";
  {
    std::ofstream f(edges);
    f << "# triangle\nM 3\n0 1\n1 2\n0 2\n";
  }
  const fs::path target = dir / "out.json";
  fs::remove(target);
  const Result r = invoke({"spectrum", "--initiator", "edges", "--edges", edges.string(), "--j", "2", "--output",
                           target.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  REQUIRE(fs::exists(target));
  CHECK_FALSE(fs::exists(dir / "out.json.partial"));
  std::ifstream in(target);
  const json doc = json::parse(in);
  CHECK(doc["kronecker"]["entries"].size() == 3);

  const Result same = invoke({"spectrum", "--initiator", "complete", "--M", "3", "--j", "2"});
  std::ifstream again(target);
  std::stringstream buffer;
  buffer << again.rdbuf();
  CHECK(json::parse(buffer.str())["kronecker"] == json::parse(same.out)["kronecker"]);

  CHECK(invoke({"evolve", "--initiator", "edges", "--edges", edges.string(), "--j", "2"}).code == cli::kExitUsage);

  const fs::path dup = dir / "dup.txt";
  {
    std::ofstream f(dup);
    f << "M 3\n0 1\n1 0\n";
  }
  CHECK(invoke({"spectrum", "--initiator", "edges", "--edges", dup.string(), "--j", "1"}).code == cli::kExitDomain);
  CHECK(invoke({"spectrum", "--initiator", "edges", "--edges", (dir / "missing.txt").string(), "--j", "1"}).code ==
        cli::kExitDomain);
  fs::remove_all(dir);
}

TEST_CASE("identical configurations give identical bytes") {
  const std::vector<std::vector<std::string>> configs{
      {"evolve", "--initiator", "cycle", "--M", "5", "--j", "6"},
      {"scaling", "--initiator", "paley", "--M", "13", "--j-min", "1", "--j-max", "4"},
      {"spectrum", "--initiator", "knn", "--n", "2", "--j", "3"},
      {"params", "--initiator", "paley", "--M", "9", "--j", "2", "--shift", "optimal"},
  };
  for (const auto& config : configs) {
    const Result a = invoke(config);
    const Result b = invoke(config);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find('\r') == std::string::npos);
  }
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"frobnicate"}).code == cli::kExitUsage);
  CHECK(invoke({"spectrum", "--j", "2"}).code == cli::kExitUsage);
  CHECK(invoke({"spectrum", "--initiator", "complete", "--j", "2"}).code == cli::kExitUsage);
  CHECK(invoke({"spectrum", "--initiator", "hypercube", "--M", "4", "--j", "2"}).code == cli::kExitUsage);
  CHECK(invoke({"spectrum", "--initiator", "knn", "--M", "4", "--j", "2"}).code == cli::kExitUsage);
  CHECK(invoke({"spectrum", "--initiator", "complete", "--M", "3", "--j", "0"}).code == cli::kExitUsage);
  CHECK(invoke({"params", "--initiator", "complete", "--M", "3", "--j", "1", "--gamma", "fast"}).code ==
        cli::kExitUsage);
  CHECK(invoke({"params", "--initiator", "complete", "--M", "3", "--j", "1", "--shift", "some"}).code ==
        cli::kExitUsage);
  CHECK(invoke({"evolve", "--initiator", "complete", "--M", "3", "--j", "1", "--format", "xml"}).code ==
        cli::kExitUsage);
  CHECK(invoke({"spectrum", "--initiator", "complete", "--M", "3", "--j", "2", "--marked", "9"}).code ==
        cli::kExitDomain);
  CHECK(invoke({"spectrum", "--initiator", "complete", "--M", "1", "--j", "2"}).code == cli::kExitDomain);
}
