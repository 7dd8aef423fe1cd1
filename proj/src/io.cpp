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

#include "qwalk/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t b = 0;
  for (;;) {
    const std::size_t e = line.find(sep, b);
    out.push_back(line.substr(b, e == std::string_view::npos ? std::string_view::npos : e - b));
    if (e == std::string_view::npos) return out;
    b = e + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view s, std::size_t line, std::string_view column) {
  s = trim(s);
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError("csv line " + std::to_string(line) + ": column " + std::string(column) +
                      ": cannot parse '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const fs::path tmp = dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Error("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw Error("cannot rename into " + path.string() + ": " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string series_csv(const std::vector<double>& p) {
  std::string s = "t,p_marked\n";
  for (std::size_t t = 0; t < p.size(); ++t) s += std::to_string(t) + "," + format_double(p[t]) + "\n";
  return s;
}

std::string peaks_csv(const std::vector<PeakRecord>& peaks) {
  std::string s = "time,probability,significant\n";
  for (const auto& pk : peaks) {
    s += std::to_string(pk.time) + "," + format_double(pk.probability) + "," +
         (pk.significant ? "true" : "false") + "\n";
  }
  return s;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string s = "n,edges,peak_prob,peak_time\n";
  for (const auto& r : rows) {
    s += std::to_string(r.n) + "," + std::to_string(r.edges) + "," + format_double(r.peak_prob) + "," +
         std::to_string(r.peak_time) + "\n";
  }
  return s;
}

std::string wide_csv(const std::vector<std::string>& labels, const std::vector<std::vector<double>>& series) {
  std::string s = "t";
  for (const auto& l : labels) s += ",p[" + l + "]";
  s += "\n";
  std::size_t len = 0;
  for (const auto& v : series) len = std::max(len, v.size());
  for (std::size_t t = 0; t < len; ++t) {
    s += std::to_string(t);
    for (const auto& v : series) s += "," + (t < v.size() ? format_double(v[t]) : std::string());
    s += "\n";
  }
  return s;
}

std::vector<ScalingPoint> parse_sweep_csv(std::string_view text) {
  std::vector<ScalingPoint> out;
  std::size_t line_no = 0;
  bool header = false;
  while (!text.empty()) {
    const std::size_t e = text.find('\n');
    std::string_view line = trim(text.substr(0, e));
    text.remove_prefix(e == std::string_view::npos ? text.size() : e + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto cols = split(line, ',');
    if (!header) {
      if (cols.size() != 4 || trim(cols[0]) != "n" || trim(cols[1]) != "edges" ||
          trim(cols[2]) != "peak_prob" || trim(cols[3]) != "peak_time") {
        throw ConfigError("csv line " + std::to_string(line_no) +
                          ": expected header 'n,edges,peak_prob,peak_time'");
      }
      header = true;
      continue;
    }
    if (cols.size() != 4) {
      throw ConfigError("csv line " + std::to_string(line_no) + ": expected 4 columns, got " +
                        std::to_string(cols.size()));
    }
    ScalingPoint p;
    p.n = parse_number<std::size_t>(cols[0], line_no, "n");
    p.edge_count = parse_number<std::size_t>(cols[1], line_no, "edges");
    p.peak_probability = parse_number<double>(cols[2], line_no, "peak_prob");
    p.peak_time = parse_number<std::size_t>(cols[3], line_no, "peak_time");
    out.push_back(p);
  }
  if (!header) throw ConfigError("csv: empty input");
  return out;
}

}  // namespace qwalk
