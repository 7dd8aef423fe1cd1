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

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qwalk/analysis.hpp"
#include "qwalk/search.hpp"
#include "qwalk/sweep.hpp"

namespace qwalk {

enum class ScanParameter { Delta, Phi };

// One SearchConfig per value, with the marked coin's delta or phi replaced.
struct ScanConfig {
  SearchConfig base;
  ScanParameter parameter = ScanParameter::Delta;
  std::vector<double> values;

  std::vector<SearchConfig> expand() const;
};

struct FitConfig {
  std::filesystem::path input;  // resolved against the config file's directory
  FitModel model = FitModel::InverseLog2;
};

// A config file holds exactly one of {"run": ...}, {"sweep": ...},
// {"scan": ...}, {"fit": ...}.
struct ExperimentConfig {
  std::variant<SearchConfig, SweepConfig, ScanConfig, FitConfig> experiment;
  std::string kind() const;
};

// ConfigError, naming the offending field, on any problem.
ExperimentConfig parse_experiment(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment(const std::filesystem::path& path);

}  // namespace qwalk
