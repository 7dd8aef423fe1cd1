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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qwalk/graphs.hpp"

namespace qwalk {

struct ScalingPoint {
  std::size_t n = 0;  // vertex count
  std::size_t edge_count = 0;
  double peak_probability = 0.0;
  std::size_t peak_time = 0;
};

enum class FitModel {
  InverseLog2,     // peak_probability ~ c / log2 N
  SqrtN,           // peak_time ~ c sqrt(N)
  PiecewiseSqrtN,  // peak_time ~ c1 sqrt(N) below the breakpoint, c2 sqrt(N) from it on
  LinearN,         // peak_time ~ c N
};

std::string_view to_string(FitModel model);
FitModel fit_model_from_string(std::string_view name);

struct ScalingFit {
  FitModel model = FitModel::InverseLog2;
  std::vector<double> prefactors;
  std::optional<double> breakpoint;  // first sqrt(N) of the upper segment
  double rms_residual = 0.0;
  double sse = 0.0;
};

// Unweighted least squares throughout. Throw ConfigError on degenerate input.
ScalingFit fit_inverse_log(const std::vector<ScalingPoint>& points);
ScalingFit fit_sqrt(const std::vector<ScalingPoint>& points);
ScalingFit fit_linear(const std::vector<ScalingPoint>& points);
// Candidate breakpoints at observed sqrt(N) values, at least two distinct N on
// each side; needs >= 6 points.
ScalingFit fit_piecewise_sqrt(const std::vector<ScalingPoint>& points);
ScalingFit fit(const std::vector<ScalingPoint>& points, FitModel model);

void to_json(nlohmann::json& j, const ScalingFit& f);

// Undirected edges (and ports = 2 x edges) per vertex for each structure.
double edges_per_vertex(GraphKind kind, int base_degree = 3);

struct KinkInput {
  std::string structure;
  GraphKind kind = GraphKind::Torus;
  double breakpoint_sqrt_n = 0.0;
  int base_degree = 3;
};

struct KinkRow {
  std::string structure;
  double breakpoint_n = 0.0;
  double edges = 0.0;
  double ports = 0.0;
};

struct KinkReport {
  std::vector<KinkRow> rows;
  double reference = 4.0 * 32.0 * 32.0;
  bool edges_agree = false;  // max/min within 25%
  bool ports_agree = false;
  std::string closer_to_reference;  // "edges" or "ports"
};

KinkReport kink_edge_report(const std::vector<KinkInput>& fits);
std::string format_kink_report(const KinkReport& r);

// Symmetric random walk after t steps; index x + t holds P(x), x in [-t, t].
std::vector<double> classical_line_distribution(int t);

// Standard deviation of a distribution over positions index - origin.
double position_stddev(const std::vector<double>& distribution, double origin);

// Period (in samples) with the largest periodogram power of the mean-removed
// series, searched on a fine frequency grid over periods in [2, n/2].
double dominant_period(const std::vector<double>& series);

}  // namespace qwalk
