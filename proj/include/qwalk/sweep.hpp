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
#include <vector>

#include "qwalk/search.hpp"

namespace qwalk {

// Which vertex is marked in each sweep instance.
enum class MarkedRule {
  Half,    // floor(N/2)
  Center,  // vertex 0 (the Bethe centre)
  Index,   // fixed index `value`
  Shell,   // first vertex of Bethe shell `value`
};

struct IntRange {
  int from = 0;
  int to = 0;
  int step = 1;
  std::vector<int> values() const;
};

struct SweepConfig {
  GraphKind family = GraphKind::Torus;
  IntRange range;       // lattice sides, line lengths, or Bethe shell counts
  int base_degree = 3;  // Bethe only
  std::optional<ShiftStyle> shift;
  CoinSpec default_coin{CoinFamily::Grover, 4};
  CoinSpec marked_coin{CoinFamily::MarkedGrover, 4};
  InitialState initial;
  MarkedRule rule = MarkedRule::Half;
  int rule_value = 0;
  std::optional<std::size_t> steps;
};

struct SweepRow {
  std::size_t n = 0;
  std::size_t edges = 0;
  double peak_prob = 0.0;
  std::size_t peak_time = 0;
  // False when no significant peak was found; the row then carries the
  // series' global maximum instead.
  bool detected = true;
};

// One SearchConfig per range value, in range order.
std::vector<SearchConfig> expand_sweep(const SweepConfig& sweep);

SweepRow summarize(const SearchRun& run);

// Runs every instance on up to `parallel` threads. Rows come back ordered by n
// ascending, independent of completion order. A failing instance aborts the
// sweep with an error naming it.
std::vector<SweepRow> run_sweep(const SweepConfig& sweep, unsigned parallel);

void to_json(nlohmann::json& j, const SweepConfig& s);
void from_json(const nlohmann::json& j, SweepConfig& s);

}  // namespace qwalk
