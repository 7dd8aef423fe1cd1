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

#include "qwalk/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "json_fields.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

bool is_line(const PortedGraph& g) {
  return g.kind() == GraphKind::LineReflecting || g.kind() == GraphKind::Cycle;
}

std::string_view initial_name(InitialKind k) {
  switch (k) {
    case InitialKind::UniformAllPorts: return "uniform";
    case InitialKind::LineHadamardSymmetric: return "line_hadamard_symmetric";
    case InitialKind::LineSymmetricCoin: return "line_symmetric_coin";
    case InitialKind::Localized: return "localized";
  }
  return "uniform";
}

InitialKind initial_from_name(const std::string& s) {
  for (auto k : {InitialKind::UniformAllPorts, InitialKind::LineHadamardSymmetric,
                 InitialKind::LineSymmetricCoin, InitialKind::Localized}) {
    if (s == initial_name(k)) return k;
  }
  throw ConfigError("kind: unknown initial state '" + s + "'");
}

}  // namespace

std::size_t default_step_budget(std::size_t vertex_count) {
  return static_cast<std::size_t>(std::ceil(2.0 * std::numbers::pi * std::sqrt(static_cast<double>(vertex_count))));
}

WalkState initial_state(const SearchConfig& config, std::shared_ptr<const PortedGraph> graph) {
  const PortedGraph& g = *graph;
  switch (config.initial.kind) {
    case InitialKind::UniformAllPorts: {
      const double a = 1.0 / std::sqrt(static_cast<double>(g.label_count()));
      return WalkState(graph, std::vector<Amplitude>(g.label_count(), a));
    }
    case InitialKind::LineHadamardSymmetric:
    case InitialKind::LineSymmetricCoin: {
      if (!is_line(g)) {
        throw ConfigError("initial_state: " + std::string(initial_name(config.initial.kind)) +
                          " requires a line or cycle graph");
      }
      const double a = 1.0 / std::sqrt(2.0 * static_cast<double>(g.vertex_count()));
      const Amplitude second = config.initial.kind == InitialKind::LineHadamardSymmetric
                                   ? Amplitude(0.0, a)
                                   : Amplitude(a, 0.0);
      std::vector<Amplitude> amps(g.label_count());
      for (std::size_t x = 0; x < g.vertex_count(); ++x) {
        amps[2 * x + kLeft] = a;
        amps[2 * x + kRight] = second;
      }
      return WalkState(graph, std::move(amps));
    }
    case InitialKind::Localized: {
      const PortLabel l = config.initial.label;
      if (l.vertex >= g.vertex_count() || l.port >= g.degree(l.vertex)) {
        throw ConfigError("initial_state: localized label (" + std::to_string(l.vertex) + ", " +
                          std::to_string(l.port) + ") does not exist");
      }
      return WalkState::basis(graph, l);
    }
  }
  throw ConfigError("initial_state: unknown kind");
}

CoinAssignment search_coins(const SearchConfig& config, const PortedGraph& g) {
  if (config.marked_vertex >= g.vertex_count()) {
    throw ConfigError("marked_vertex: " + std::to_string(config.marked_vertex) +
                      " out of range for " + std::to_string(g.vertex_count()) + " vertices");
  }
  CoinAssignment coins;
  detail::with_context("default_coin", [&] {
    for (auto d : g.distinct_degrees()) {
      coins.set_default(realize_coin(config.default_coin.with_degree(static_cast<int>(d))));
    }
  });
  if (g.kind() == GraphKind::LineReflecting) {
    const CoinSpec b = config.boundary_coin.value_or(CoinSpec{CoinFamily::SigmaX, 2});
    detail::with_context("boundary_coin", [&] {
      const CoinMatrix m = realize_coin(b.with_degree(2));
      for (auto v : g.boundary_vertices()) coins.set_override(v, m);
    });
  }
  const auto d = static_cast<int>(g.degree(config.marked_vertex));
  detail::with_context("marked_coin", [&] {
    coins.set_override(config.marked_vertex, realize_coin(config.marked_coin.with_degree(d)));
  });
  return coins;
}

SearchRun run_search(const SearchConfig& config) {
  auto graph = std::make_shared<const PortedGraph>(build_graph(config.graph));
  const PortedGraph& g = *graph;
  const CoinAssignment coins = search_coins(config, g);
  WalkState state = initial_state(config, graph);
  const WalkOperator op(graph, coins);

  SearchRun run;
  run.config = config;
  run.vertex_count = g.vertex_count();
  run.edge_count = g.edge_count();
  const std::size_t steps = config.steps.value_or(default_step_budget(g.vertex_count()));
  run.p_marked.reserve(steps + 1);
  op.evolve(state, steps, [&](std::size_t, const WalkState& s) {
    run.p_marked.push_back(vertex_probability(s, config.marked_vertex));
  });
  run.peaks = local_peaks(run.p_marked, 1.0 / static_cast<double>(g.vertex_count()));
  return run;
}

std::vector<PeakRecord> local_peaks(const std::vector<double>& p, double baseline) {
  std::vector<PeakRecord> out;
  if (p.size() < 3) return out;
  const double g = *std::max_element(p.begin(), p.end());
  const double lo = std::max(2.0 * baseline, 0.25 * g);
  for (std::size_t t = 1; t + 1 < p.size(); ++t) {
    if (p[t] > p[t - 1] && p[t] >= p[t + 1]) out.push_back({t, p[t], p[t] >= lo});
  }
  return out;
}

std::optional<PeakRecord> first_significant_peak(const std::vector<double>& p, double baseline) {
  if (p.empty()) return std::nullopt;
  const double g = *std::max_element(p.begin(), p.end());
  const double hi = std::max(2.0 * baseline, 0.5 * g);
  const double lo = std::max(2.0 * baseline, 0.25 * g);
  std::size_t t = 0;
  while (t < p.size() && p[t] < hi) ++t;
  if (t == p.size()) return std::nullopt;
  std::size_t begin = t;
  while (begin > 0 && p[begin - 1] >= lo) --begin;
  std::size_t end = t;
  while (end < p.size() && p[end] >= lo) ++end;

  double m = 0.0;
  for (std::size_t k = begin; k < end; ++k) m = std::max(m, p[k]);
  const double tol = 1e-12 * std::max(1.0, m);
  std::size_t best = begin;
  for (std::size_t k = begin; k < end; ++k) {
    if (p[k] >= m - tol) best = k;
  }
  if (best == 0 || best + 1 >= p.size()) return std::nullopt;
  if (p[best] < p[best - 1] || p[best] < p[best + 1]) return std::nullopt;
  return PeakRecord{best, p[best], true};
}

std::optional<PeakRecord> first_significant_peak(const SearchRun& run) {
  return first_significant_peak(run.p_marked, 1.0 / static_cast<double>(run.vertex_count));
}

std::size_t amplification_estimate(double p) {
  if (!(p > 0.0) || p > 1.0) {
    throw std::invalid_argument("amplification_estimate: probability must lie in (0, 1]");
  }
  return static_cast<std::size_t>(std::ceil(1.0 / std::sqrt(p) - 1e-9));
}

std::vector<SearchRun> delta_sweep_line(const SearchConfig& base, const std::vector<double>& deltas) {
  if (base.graph.kind != GraphKind::LineReflecting && base.graph.kind != GraphKind::Cycle) {
    throw ConfigError("graph: delta sweep requires a line or cycle");
  }
  std::vector<SearchRun> runs;
  runs.reserve(deltas.size());
  for (double delta : deltas) {
    SearchConfig c = base;
    c.marked_coin = CoinSpec{CoinFamily::SymmetricHadamard, 2, delta};
    runs.push_back(run_search(c));
  }
  return runs;
}

InitialState initial_state_from_json(const nlohmann::json& s) {
  InitialState out;
  if (s.is_string()) {
    out.kind = initial_from_name(s.get<std::string>());
    if (out.kind == InitialKind::Localized) {
      throw ConfigError("localized needs an object with vertex and port");
    }
    return out;
  }
  out.kind = initial_from_name(detail::required<std::string>(s, "kind"));
  if (out.kind == InitialKind::Localized) {
    out.label.vertex = detail::required<std::uint32_t>(s, "vertex");
    out.label.port = detail::optional<std::uint32_t>(s, "port", 0);
  }
  return out;
}

nlohmann::json initial_state_to_json(const InitialState& s) {
  if (s.kind == InitialKind::Localized) {
    return {{"kind", "localized"}, {"vertex", s.label.vertex}, {"port", s.label.port}};
  }
  return std::string(initial_name(s.kind));
}

void to_json(nlohmann::json& j, const SearchConfig& c) {
  j = nlohmann::json::object();
  j["graph"] = c.graph;
  j["marked_vertex"] = c.marked_vertex;
  j["default_coin"] = c.default_coin;
  j["marked_coin"] = c.marked_coin;
  if (c.boundary_coin) j["boundary_coin"] = *c.boundary_coin;
  j["initial_state"] = initial_state_to_json(c.initial);
  if (c.steps) j["steps"] = *c.steps;
}

void from_json(const nlohmann::json& j, SearchConfig& c) {
  using detail::optional;
  using detail::required;
  using detail::with_context;
  if (!j.is_object()) throw ConfigError("expected a JSON object");
  c = SearchConfig{};
  const auto& graph_json = detail::require_field(j, "graph");
  with_context("graph", [&] { graph_json.get_to(c.graph); });
  const auto marked = required<std::int64_t>(j, "marked_vertex");
  if (marked < 0) throw ConfigError("marked_vertex: must be >= 0");
  c.marked_vertex = static_cast<std::uint32_t>(marked);
  const auto& default_coin_json = detail::require_field(j, "default_coin");
  with_context("default_coin", [&] { default_coin_json.get_to(c.default_coin); });
  const auto& marked_coin_json = detail::require_field(j, "marked_coin");
  with_context("marked_coin", [&] { marked_coin_json.get_to(c.marked_coin); });
  if (j.contains("boundary_coin")) {
    with_context("boundary_coin", [&] { c.boundary_coin = j.at("boundary_coin").get<CoinSpec>(); });
  }
  if (j.contains("initial_state")) {
    c.initial = with_context("initial_state", [&] { return initial_state_from_json(j.at("initial_state")); });
  }
  if (j.contains("steps")) {
    const auto steps = required<std::int64_t>(j, "steps");
    if (steps < 0) throw ConfigError("steps: must be >= 0");
    c.steps = static_cast<std::size_t>(steps);
  }
}

}  // namespace qwalk
