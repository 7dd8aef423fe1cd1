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
#include <string_view>
#include <vector>

#include "qwalk/analysis.hpp"
#include "qwalk/search.hpp"
#include "qwalk/sweep.hpp"

namespace qwalk {

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

// Writes to a sibling temp file and renames it over `path`, so readers only
// ever see complete files.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// ConfigError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

std::string series_csv(const std::vector<double>& p_marked);              // t,p_marked
std::string peaks_csv(const std::vector<PeakRecord>& peaks);              // time,probability,significant
std::string sweep_csv(const std::vector<SweepRow>& rows);                 // n,edges,peak_prob,peak_time
std::string wide_csv(const std::vector<std::string>& labels,
                     const std::vector<std::vector<double>>& series);     // t,p[v1],p[v2],...

// Parses the sweep CSV. ConfigError (with the line number) on malformed input.
std::vector<ScalingPoint> parse_sweep_csv(std::string_view text);

}  // namespace qwalk
