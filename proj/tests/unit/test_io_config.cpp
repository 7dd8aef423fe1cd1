// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <filesystem>
#include <limits>
#include <random>

#include "doctest.h"
#include "qwalk/config.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/io.hpp"

using namespace qwalk;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path d = fs::temp_directory_path() / "qwalk_unit_io";
  fs::create_directories(d);
  return d;
}

ExperimentConfig parse(const char* text) { return parse_experiment(nlohmann::json::parse(text)); }

std::string error_of(const char* text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("format_double round trips") {
  CHECK(format_double(0.25) == "0.25");
  CHECK(format_double(1.0 / 400) == "0.0025");
  CHECK(format_double(1.0) == "1");
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng) * std::pow(10.0, i % 20 - 10);
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("csv writers") {
  CHECK(series_csv({0.5, 0.25}) == "t,p_marked\n0,0.5\n1,0.25\n");
  CHECK(peaks_csv({{3, 0.5, true}, {9, 0.1, false}}) ==
        "time,probability,significant\n3,0.5,true\n9,0.1,false\n");
  CHECK(sweep_csv({{100, 200, 0.3, 15, true}}) == "n,edges,peak_prob,peak_time\n100,200,0.3,15\n");
  CHECK(wide_csv({"0", "1.0471975511965976"}, {{0.1, 0.2}, {0.3, 0.4}}) ==
        "t,p[0],p[1.0471975511965976]\n0,0.1,0.3\n1,0.2,0.4\n");
}

TEST_CASE("sweep csv parsing") {
  const auto p = parse_sweep_csv("n,edges,peak_prob,peak_time\n100,200,0.3,15\n\n400,800,0.23,29\n");
  REQUIRE(p.size() == 2);
  CHECK(p[1].n == 400);
  CHECK(p[1].peak_probability == 0.23);
  CHECK(p[1].peak_time == 29);
  const auto round = parse_sweep_csv(sweep_csv({{100, 200, 0.1 + 0.2, 15, true}}));
  CHECK(round[0].peak_probability == 0.1 + 0.2);

  CHECK_THROWS_AS(parse_sweep_csv(""), ConfigError);
  CHECK_THROWS_AS(parse_sweep_csv("a,b,c,d\n"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_sweep_csv("n,edges,peak_prob,peak_time\n100,200,abc,15\n"),
                       doctest::Contains("peak_prob"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_sweep_csv("n,edges,peak_prob,peak_time\n100,200,0.3\n"),
                       doctest::Contains("line 2"), ConfigError);
}

TEST_CASE("atomic write") {
  const fs::path f = scratch_dir() / "atomic.txt";
  write_file_atomic(f, "first\n");
  write_file_atomic(f, "second\n");
  CHECK(read_file(f) == "second\n");
  for (const auto& e : fs::directory_iterator(scratch_dir())) {
    CHECK(e.path().filename().string().find(".tmp.") == std::string::npos);
  }
  CHECK_THROWS_AS(read_file(scratch_dir() / "missing.json"), ConfigError);
  CHECK_THROWS(write_file_atomic(scratch_dir() / "no_such_dir" / "x.csv", "x"));
}

TEST_CASE("experiment configs") {
  const auto run = parse(R"({"run": {"graph": {"kind": "torus", "width": 4}, "marked_vertex": 3,
      "default_coin": {"family": "grover"}, "marked_coin": {"family": "marked_grover"}}})");
  CHECK(run.kind() == "run");
  CHECK(std::get<SearchConfig>(run.experiment).graph.height == 4);

  const auto sweep = parse(R"({"sweep": {"family": "torus", "sides": {"from": 10, "to": 48, "step": 2},
      "default_coin": {"family": "grover"}, "marked_coin": {"family": "marked_grover"}}})");
  CHECK(std::get<SweepConfig>(sweep.experiment).range.values().size() == 20);

  const auto scan = parse(R"({"scan": {"base": {"graph": {"kind": "torus", "width": 10}, "marked_vertex": 45,
      "default_coin": {"family": "grover"}, "marked_coin": {"family": "phased_marked_grover"}},
      "parameter": "phi", "values": [0, 1.0471975511965976]}})");
  const auto& sc = std::get<ScanConfig>(scan.experiment);
  CHECK(sc.expand()[1].marked_coin.phi == 1.0471975511965976);

  const auto fit = parse_experiment(nlohmann::json::parse(R"({"fit": {"input": "s.csv", "model": "piecewise_sqrt_n"}})"),
                                    "/data");
  CHECK(std::get<FitConfig>(fit.experiment).input == fs::path("/data/s.csv"));
}

TEST_CASE("config errors name the field") {
  CHECK(error_of(R"({})").find("exactly one") != std::string::npos);
  CHECK(error_of(R"({"run": {}, "fit": {}})").find("exactly one") != std::string::npos);
  CHECK(error_of(R"({"run": {"graph": {"kind": "torus", "width": 4}, "marked_vertex": 3,
      "default_coin": {"family": "grover"}, "marked_coin": {"family": "marked_grovr"}}})")
            .rfind("run.marked_coin.family", 0) == 0);
  CHECK(error_of(R"({"run": {"graph": {"kind": "torus"}, "marked_vertex": 3,
      "default_coin": {"family": "grover"}, "marked_coin": {"family": "marked_grover"}}})")
            .rfind("run.graph.width", 0) == 0);
  CHECK(error_of(R"({"scan": {"base": {"graph": {"kind": "torus", "width": 10}, "marked_vertex": 45,
      "default_coin": {"family": "grover"}, "marked_coin": {"family": "biased_grover"}},
      "parameter": "delta", "values": []}})")
            .rfind("scan.values", 0) == 0);
  CHECK(error_of(R"({"scan": {"base": {"graph": {"kind": "torus", "width": 10}, "marked_vertex": 45,
      "default_coin": {"family": "grover"}, "marked_coin": {"family": "biased_grover"}},
      "parameter": "delta", "values": [0.5, 0.3]}})")
            .rfind("scan.values.delta", 0) == 0);
  CHECK(error_of(R"({"sweep": {"family": "torus", "sides": {"from": 10, "to": 8},
      "default_coin": {"family": "grover"}, "marked_coin": {"family": "marked_grover"}}})")
            .rfind("sweep.sides.to", 0) == 0);
  CHECK(error_of(R"({"fit": {"input": "s.csv", "model": "cubic"}})").rfind("fit.model", 0) == 0);
}
