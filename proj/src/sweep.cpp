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

#include "qwalk/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "json_fields.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

std::string instance_name(const SearchConfig& c) {
  return describe(c.graph) + " marked " + std::to_string(c.marked_vertex);
}

const char* range_key(GraphKind k) {
  switch (k) {
    case GraphKind::Bethe: return "shells";
    case GraphKind::LineReflecting:
    case GraphKind::Cycle: return "lengths";
    default: return "sides";
  }
}

}  // namespace

std::vector<int> IntRange::values() const {
  if (step < 1) throw ConfigError("step: must be >= 1");
  if (to < from) throw ConfigError("to: must be >= from");
  std::vector<int> out;
  for (int v = from; v <= to; v += step) out.push_back(v);
  return out;
}

std::vector<SearchConfig> expand_sweep(const SweepConfig& s) {
  std::vector<SearchConfig> out;
  for (int v : s.range.values()) {
    SearchConfig c;
    c.graph.kind = s.family;
    c.graph.shift = s.shift;
    switch (s.family) {
      case GraphKind::LineReflecting:
      case GraphKind::Cycle:
        c.graph.n = v;
        c.graph.boundary = s.family == GraphKind::Cycle ? Boundary::Periodic : Boundary::Reflecting;
        break;
      case GraphKind::Bethe:
        c.graph.base_degree = s.base_degree;
        c.graph.shells = v;
        break;
      case GraphKind::Custom:
        throw ConfigError("family: custom graphs cannot be swept");
      default:
        c.graph.width = v;
        c.graph.height = v;
        c.graph.diagonals = s.family == GraphKind::TorusDiagonal;
        break;
    }
    std::size_t n = 0;
    if (s.family == GraphKind::Bethe) {
      n = bethe_vertex_count({s.base_degree, v});
    } else if (s.family == GraphKind::LineReflecting || s.family == GraphKind::Cycle) {
      n = static_cast<std::size_t>(v);
    } else {
      n = static_cast<std::size_t>(v) * static_cast<std::size_t>(v);
    }
    switch (s.rule) {
      case MarkedRule::Half: c.marked_vertex = static_cast<std::uint32_t>(n / 2); break;
      case MarkedRule::Center: c.marked_vertex = 0; break;
      case MarkedRule::Index:
        if (s.rule_value < 0 || static_cast<std::size_t>(s.rule_value) >= n) {
          throw ConfigError("marked.value: index " + std::to_string(s.rule_value) +
                            " out of range for " + describe(c.graph));
        }
        c.marked_vertex = static_cast<std::uint32_t>(s.rule_value);
        break;
      case MarkedRule::Shell:
        if (s.family != GraphKind::Bethe) throw ConfigError("marked.rule: shell applies to bethe only");
        if (s.rule_value < 0 || s.rule_value > v) {
          throw ConfigError("marked.value: shell " + std::to_string(s.rule_value) + " exceeds " +
                            describe(c.graph));
        }
        c.marked_vertex = s.rule_value == 0
                              ? 0
                              : static_cast<std::uint32_t>(bethe_vertex_count({s.base_degree, s.rule_value - 1}));
        break;
    }
    c.default_coin = s.default_coin;
    c.marked_coin = s.marked_coin;
    c.initial = s.initial;
    c.steps = s.steps;
    out.push_back(c);
  }
  return out;
}

SweepRow summarize(const SearchRun& run) {
  SweepRow row;
  row.n = run.vertex_count;
  row.edges = run.edge_count;
  if (auto peak = first_significant_peak(run)) {
    row.peak_prob = peak->probability;
    row.peak_time = peak->time;
  } else {
    const auto it = std::max_element(run.p_marked.begin(), run.p_marked.end());
    row.peak_prob = *it;
    row.peak_time = static_cast<std::size_t>(it - run.p_marked.begin());
    row.detected = false;
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& sweep, unsigned parallel) {
  const std::vector<SearchConfig> configs = expand_sweep(sweep);
  std::vector<SweepRow> rows(configs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::size_t failed_index = configs.size();
  std::mutex mu;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= configs.size()) return;
      {
        std::lock_guard lock(mu);
        if (failure) return;
      }
      try {
        rows[i] = summarize(run_search(configs[i]));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure || i < failed_index) {
          failure = std::current_exception();
          failed_index = i;
        }
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(parallel, static_cast<unsigned>(configs.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  if (failure) {
    const std::string name = instance_name(configs[failed_index]);
    try {
      std::rethrow_exception(failure);
    } catch (const ConfigError& e) {
      throw ConfigError("sweep instance " + name + ": " + e.what());
    } catch (const InvariantError& e) {
      throw InvariantError("sweep instance " + name + ": " + e.what());
    } catch (const std::exception& e) {
      throw Error("sweep instance " + name + ": " + e.what());
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) { return a.n < b.n; });
  return rows;
}

void to_json(nlohmann::json& j, const SweepConfig& s) {
  nlohmann::json g;
  GraphSpec probe;
  probe.kind = s.family;
  to_json(g, probe);
  j = nlohmann::json::object();
  j["family"] = g["kind"];
  if (s.family == GraphKind::Cycle || s.family == GraphKind::LineReflecting) j["boundary"] = g["boundary"];
  if (s.family == GraphKind::TorusDiagonal) j["family"] = "torus_diagonal";
  j[range_key(s.family)] = {{"from", s.range.from}, {"to", s.range.to}, {"step", s.range.step}};
  if (s.family == GraphKind::Bethe) j["base_degree"] = s.base_degree;
  if (s.shift) j["shift"] = std::string(to_string(*s.shift));
  j["default_coin"] = s.default_coin;
  j["marked_coin"] = s.marked_coin;
  switch (s.rule) {
    case MarkedRule::Half: j["marked"] = "half"; break;
    case MarkedRule::Center: j["marked"] = "center"; break;
    case MarkedRule::Index: j["marked"] = {{"rule", "index"}, {"value", s.rule_value}}; break;
    case MarkedRule::Shell: j["marked"] = {{"rule", "shell"}, {"value", s.rule_value}}; break;
  }
  if (s.initial.kind != InitialKind::UniformAllPorts) j["initial_state"] = initial_state_to_json(s.initial);
  if (s.steps) j["steps"] = *s.steps;
}

void from_json(const nlohmann::json& j, SweepConfig& s) {
  using detail::optional;
  using detail::required;
  using detail::with_context;
  s = SweepConfig{};
  const auto family = required<std::string>(j, "family");
  if (family == "torus") {
    s.family = optional<bool>(j, "diagonals", false) ? GraphKind::TorusDiagonal : GraphKind::Torus;
  } else if (family == "torus_diagonal") {
    s.family = GraphKind::TorusDiagonal;
  } else if (family == "hex_torus") {
    s.family = GraphKind::HexTorus;
  } else if (family == "bethe") {
    s.family = GraphKind::Bethe;
    s.base_degree = optional<int>(j, "base_degree", 3);
  } else if (family == "line" || family == "cycle") {
    const auto b = optional<std::string>(j, "boundary", family == "cycle" ? "periodic" : "reflecting");
    if (b != "periodic" && b != "reflecting") throw ConfigError("boundary: expected 'reflecting' or 'periodic'");
    s.family = b == "periodic" ? GraphKind::Cycle : GraphKind::LineReflecting;
  } else {
    throw ConfigError("family: unknown sweep family '" + family + "'");
  }

  const char* key = range_key(s.family);
  const auto& r = detail::require_field(j, key);
  with_context(key, [&] {
    s.range.from = required<int>(r, "from");
    s.range.to = required<int>(r, "to");
    s.range.step = optional<int>(r, "step", 1);
    (void)s.range.values();
  });

  if (j.contains("shift")) {
    const auto sh = required<std::string>(j, "shift");
    if (sh == "flip_flop") {
      s.shift = ShiftStyle::FlipFlop;
    } else if (sh == "direction_preserving") {
      s.shift = ShiftStyle::DirectionPreserving;
    } else {
      throw ConfigError("shift: expected 'flip_flop' or 'direction_preserving', got '" + sh + "'");
    }
  }
  const auto& dc = detail::require_field(j, "default_coin");
  with_context("default_coin", [&] { dc.get_to(s.default_coin); });
  const auto& mc = detail::require_field(j, "marked_coin");
  with_context("marked_coin", [&] { mc.get_to(s.marked_coin); });

  if (j.contains("initial_state")) {
    s.initial = with_context("initial_state", [&] { return initial_state_from_json(j.at("initial_state")); });
  }

  if (j.contains("marked")) {
    const auto& m = j.at("marked");
    const std::string rule = m.is_string() ? m.get<std::string>()
                                           : with_context("marked", [&] { return required<std::string>(m, "rule"); });
    if (rule == "half") {
      s.rule = MarkedRule::Half;
    } else if (rule == "center") {
      s.rule = MarkedRule::Center;
    } else if (rule == "index" || rule == "shell") {
      s.rule = rule == "index" ? MarkedRule::Index : MarkedRule::Shell;
      if (m.is_string()) throw ConfigError("marked: rule '" + rule + "' needs an object with a value");
      s.rule_value = with_context("marked", [&] { return required<int>(m, "value"); });
    } else {
      throw ConfigError("marked.rule: unknown rule '" + rule + "'");
    }
  }
  if (j.contains("steps")) {
    const auto steps = required<std::int64_t>(j, "steps");
    if (steps < 0) throw ConfigError("steps: must be >= 0");
    s.steps = static_cast<std::size_t>(steps);
  }
}

}  // namespace qwalk
