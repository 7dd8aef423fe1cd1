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
#include <cstdint>
#include <optional>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/graphs.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

enum class InitialKind {
  UniformAllPorts,        // 1/sqrt(labels) everywhere
  LineHadamardSymmetric,  // (|x,0> + i|x,1>)/sqrt(2N)
  LineSymmetricCoin,      // (|x,0> + |x,1>)/sqrt(2N)
  Localized,              // one basis label
};

struct InitialState {
  InitialKind kind = InitialKind::UniformAllPorts;
  PortLabel label;  // Localized only
};

struct SearchConfig {
  GraphSpec graph;
  std::uint32_t marked_vertex = 0;
  CoinSpec default_coin{CoinFamily::Grover, 4};
  CoinSpec marked_coin{CoinFamily::MarkedGrover, 4};
  std::optional<CoinSpec> boundary_coin;  // reflecting lines; sigma_x when unset
  InitialState initial;
  std::optional<std::size_t> steps;  // default: default_step_budget(N)
};

struct PeakRecord {
  std::size_t time = 0;
  double probability = 0.0;
  bool significant = false;
};

struct SearchRun {
  SearchConfig config;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::vector<double> p_marked;  // length steps + 1
  std::vector<PeakRecord> peaks;  // every local maximum, in time order
};

// ceil(4 * (pi/2) * sqrt(N)): two revival periods of the torus search.
std::size_t default_step_budget(std::size_t vertex_count);

WalkState initial_state(const SearchConfig& config, std::shared_ptr<const PortedGraph> graph);

// Default coin at every degree, boundary coin on reflecting-line ends, marked
// coin on the marked vertex (taking precedence over the boundary coin).
CoinAssignment search_coins(const SearchConfig& config, const PortedGraph& graph);

SearchRun run_search(const SearchConfig& config);

// Peak of the first excursion of the series: enter when p >= max(2 baseline,
// 50% of the global max), extend both ways while p >= max(2 baseline, 25% of
// the global max), and take the highest point (latest on ties). Absent when
// nothing enters, or the hump's highest point is t = 0 or the final sample
// (not a confirmed local maximum).
std::optional<PeakRecord> first_significant_peak(const std::vector<double>& series, double baseline);
std::optional<PeakRecord> first_significant_peak(const SearchRun& run);  // baseline 1/N

// Local maxima (t >= 1, rising into t, not rising after). `significant` marks
// those at or above max(2 baseline, 25% of the global max).
std::vector<PeakRecord> local_peaks(const std::vector<double>& series, double baseline);

// ceil(1/sqrt(p)): amplitude-amplification repetition scale. An estimate only.
std::size_t amplification_estimate(double peak_probability);

// One run per delta with marked coin symmetric_hadamard(delta).
std::vector<SearchRun> delta_sweep_line(const SearchConfig& base, const std::vector<double>& deltas);

// JSON form: "uniform" | "line_hadamard_symmetric" | "line_symmetric_coin" |
// {"kind": "localized", "vertex": v, "port": p}.
InitialState initial_state_from_json(const nlohmann::json& j);
nlohmann::json initial_state_to_json(const InitialState& s);

void to_json(nlohmann::json& j, const SearchConfig& c);
void from_json(const nlohmann::json& j, SearchConfig& c);

}  // namespace qwalk
