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

#include "qwalk/config.hpp"

#include "json_fields.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/io.hpp"

namespace qwalk {

std::vector<SearchConfig> ScanConfig::expand() const {
  if (values.empty()) throw ConfigError("scan.values: empty value list");
  std::vector<SearchConfig> out;
  for (double v : values) {
    SearchConfig c = base;
    (parameter == ScanParameter::Delta ? c.marked_coin.delta : c.marked_coin.phi) = v;
    out.push_back(c);
  }
  return out;
}

std::string ExperimentConfig::kind() const {
  static const char* names[] = {"run", "sweep", "scan", "fit"};
  return names[experiment.index()];
}

ExperimentConfig parse_experiment(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  using detail::required;
  using detail::with_context;
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  int present = 0;
  for (const char* k : {"run", "sweep", "scan", "fit"}) present += j.contains(k) ? 1 : 0;
  if (present != 1) {
    throw ConfigError("config: expected exactly one of run, sweep, scan, fit (found " +
                      std::to_string(present) + ")");
  }

  ExperimentConfig e;
  if (j.contains("run")) {
    e.experiment = with_context("run", [&] { return j.at("run").get<SearchConfig>(); });
  } else if (j.contains("sweep")) {
    e.experiment = with_context("sweep", [&] { return j.at("sweep").get<SweepConfig>(); });
  } else if (j.contains("scan")) {
    const auto& s = j.at("scan");
    e.experiment = with_context("scan", [&] {
      ScanConfig c;
      const auto& base = detail::require_field(s, "base");
      c.base = with_context("base", [&] { return base.get<SearchConfig>(); });
      const auto p = required<std::string>(s, "parameter");
      if (p == "delta") {
        c.parameter = ScanParameter::Delta;
      } else if (p == "phi") {
        c.parameter = ScanParameter::Phi;
      } else {
        throw ConfigError("parameter: expected 'delta' or 'phi', got '" + p + "'");
      }
      const auto& values = detail::require_field(s, "values");
      if (!values.is_array()) throw ConfigError("values: expected an array of numbers");
      for (std::size_t i = 0; i < values.size(); ++i) {
        c.values.push_back(detail::field_as<double>(values[i], "values[" + std::to_string(i) + "]"));
      }
      if (c.values.empty()) throw ConfigError("values: empty value list");
      // Surface coin-domain problems now rather than halfway through the scan.
      for (const auto& sc : c.expand()) {
        with_context("values", [&] { (void)realize_coin(sc.marked_coin); });
      }
      return c;
    });
  } else {
    const auto& f = j.at("fit");
    e.experiment = with_context("fit", [&] {
      FitConfig c;
      std::filesystem::path in = required<std::string>(f, "input");
      c.input = in.is_relative() && !base_dir.empty() ? base_dir / in : in;
      c.model = fit_model_from_string(required<std::string>(f, "model"));
      return c;
    });
  }
  return e;
}

ExperimentConfig load_experiment(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ConfigError("config: " + path.string() + ": malformed JSON: " + err.what());
  }
  return parse_experiment(j, path.parent_path());
}

}  // namespace qwalk
