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
#include <numbers>
#include <random>

#include "doctest.h"
#include "qwalk/analysis.hpp"
#include "qwalk/errors.hpp"

using namespace qwalk;

namespace {

std::vector<ScalingPoint> sides(int from, int to, int step, double (*prob)(double), double (*time)(double)) {
  std::vector<ScalingPoint> p;
  for (int s = from; s <= to; s += step) {
    const auto n = static_cast<std::size_t>(s * s);
    p.push_back({n, 2 * n, prob(double(n)), static_cast<std::size_t>(std::lround(time(double(n))))});
  }
  return p;
}

}  // namespace

TEST_CASE("inverse log fit recovers exact data") {
  const auto p = sides(4, 40, 3, [](double n) { return 2.0 / std::log2(n); }, [](double) { return 1.0; });
  const auto f = fit_inverse_log(p);
  CHECK(f.model == FitModel::InverseLog2);
  REQUIRE(f.prefactors.size() == 1);
  CHECK(std::abs(f.prefactors[0] - 2.0) < 1e-12);
  CHECK(f.rms_residual < 1e-12);
  CHECK_FALSE(f.breakpoint);
}

TEST_CASE("fit preconditions") {
  std::vector<ScalingPoint> two{{100, 200, 0.3, 15}, {400, 800, 0.23, 30}};
  CHECK_THROWS_AS(fit_inverse_log(two), ConfigError);
  CHECK_THROWS_AS(fit_piecewise_sqrt(two), ConfigError);
  std::vector<ScalingPoint> same(5, ScalingPoint{100, 200, 0.3, 15});
  CHECK_THROWS_AS(fit_inverse_log(same), ConfigError);
  std::vector<ScalingPoint> narrow{{100, 0, 0, 15}, {100, 0, 0, 15}, {144, 0, 0, 18},
                                   {144, 0, 0, 18}, {196, 0, 0, 21}, {196, 0, 0, 21}};
  CHECK_THROWS_AS(fit_piecewise_sqrt(narrow), ConfigError);  // only three distinct N
}

TEST_CASE("piecewise fit on exact piecewise data") {
  // Even sides keep 1.5 * side integral.
  std::vector<ScalingPoint> even;
  for (int side = 10; side <= 48; side += 2) {
    const double c = side < 30 ? 1.5 : 2.0;
    even.push_back({static_cast<std::size_t>(side * side), 0, 0.0, static_cast<std::size_t>(c * side)});
  }
  const auto f = fit_piecewise_sqrt(even);
  REQUIRE(f.prefactors.size() == 2);
  REQUIRE(f.breakpoint);
  CHECK(*f.breakpoint > 29);
  CHECK(*f.breakpoint <= 31);
  CHECK(std::abs(f.prefactors[0] - 1.5) < 1e-12);
  CHECK(std::abs(f.prefactors[1] - 2.0) < 1e-12);
  CHECK(f.rms_residual < 1e-12);
}

TEST_CASE("piecewise never does worse than a single segment") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> noise(0.7, 1.3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ScalingPoint> p;
    for (int s = 6; s <= 30; ++s) {
      p.push_back({static_cast<std::size_t>(s * s), 0, 0.0, static_cast<std::size_t>(std::lround(1.7 * s * noise(rng)))});
    }
    CHECK(fit_piecewise_sqrt(p).sse <= fit_sqrt(p).sse + 1e-9);
  }
}

TEST_CASE("sqrt and linear fits") {
  const auto p = sides(5, 30, 5, [](double) { return 0.1; }, [](double n) { return 3.0 * std::sqrt(n); });
  CHECK(std::abs(fit_sqrt(p).prefactors[0] - 3.0) < 1e-12);
  CHECK(fit_sqrt(p).rms_residual < 1e-12);
  CHECK(fit_linear(p).rms_residual > 1.0);
  CHECK(fit(p, FitModel::SqrtN).model == FitModel::SqrtN);
}

TEST_CASE("fit report json") {
  ScalingFit f;
  f.model = FitModel::PiecewiseSqrtN;
  f.prefactors = {1.5, 2.0};
  f.breakpoint = 32.0;
  f.rms_residual = 0.25;
  const nlohmann::json j = f;
  CHECK(j["model"] == "piecewise_sqrt_n");
  CHECK(j["prefactors"] == nlohmann::json::array({1.5, 2.0}));
  CHECK(j["breakpoint"] == 32.0);
  CHECK(j["rms_residual"] == 0.25);
  CHECK(nlohmann::json(ScalingFit{})["breakpoint"].is_null());
  CHECK(fit_model_from_string("inverse_log2") == FitModel::InverseLog2);
  CHECK_THROWS_AS(fit_model_from_string("cubic"), ConfigError);
}

TEST_CASE("kink edge report") {
  const auto r = kink_edge_report({{"torus", GraphKind::Torus, 32},
                                   {"hex", GraphKind::HexTorus, 42},
                                   {"degree-8", GraphKind::TorusDiagonal, 17}});
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].edges == 2048);
  CHECK(r.rows[0].ports == 4096);
  CHECK(r.rows[1].edges == 2646);
  CHECK(r.rows[2].edges == 1156);
  CHECK(r.reference == 4096);
  CHECK_FALSE(r.edges_agree);
  CHECK(format_kink_report(r).find("torus,1024,2048,4096") != std::string::npos);
}

TEST_CASE("classical line distribution") {
  const auto t2 = classical_line_distribution(2);
  REQUIRE(t2.size() == 5);
  CHECK(t2[0] == doctest::Approx(0.25));
  CHECK(t2[1] == 0.0);
  CHECK(t2[2] == doctest::Approx(0.5));
  CHECK(t2[4] == doctest::Approx(0.25));

  const auto t100 = classical_line_distribution(100);
  double sum = 0.0;
  for (double p : t100) sum += p;
  CHECK(std::abs(sum - 1.0) < 1e-12);
  CHECK(std::abs(position_stddev(t100, 100) - 10.0) < 1e-9);
  CHECK(classical_line_distribution(0) == std::vector<double>{1.0});
}

TEST_CASE("dominant period") {
  for (double period : {3.0, 7.0, 12.5}) {
    std::vector<double> s;
    for (int t = 0; t <= 200; ++t) s.push_back(0.3 + 0.1 * std::sin(2 * std::numbers::pi * t / period) + 0.001 * t);
    CHECK(std::abs(dominant_period(s) - period) < 0.1 * period);
  }
  CHECK_THROWS(dominant_period({1.0, 2.0}));
}
