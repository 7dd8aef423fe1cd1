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

// qwalk: command-line front end for the quantum-walk search simulator.

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwalk/analysis.hpp"
#include "qwalk/config.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/io.hpp"
#include "qwalk/kernels.hpp"
#include "qwalk/search.hpp"
#include "qwalk/sweep.hpp"

namespace fs = std::filesystem;
using namespace qwalk;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
  std::string config;
  std::string out;
  unsigned parallel = 1;
  bool gnuplot = false;
  std::string input;  // fit only
  std::string model;  // fit only
};

fs::path sibling(const fs::path& out, const std::string& suffix) {
  fs::path p = out;
  p.replace_filename(out.stem().string() + suffix);
  return p;
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

// Run metadata lives beside the data so the data files stay byte-deterministic.
void write_sidecar(const fs::path& out, const std::string& command, const Options& o, double seconds,
                   nlohmann::json extra = nlohmann::json::object()) {
  nlohmann::json j = std::move(extra);
  j["command"] = command;
  j["version"] = kVersion;
  if (!o.config.empty()) j["config"] = o.config;
  j["output"] = out.string();
  j["kernels"] = std::string(kernels::to_string(kernels::active_kernels().isa));
  j["parallel"] = o.parallel;
  j["finished_utc"] = utc_now();
  j["wall_seconds"] = seconds;
  write_file_atomic(sibling(out, ".meta.json"), j.dump(2) + "\n");
}

void write_gnuplot(const fs::path& out, const std::string& body) {
  write_file_atomic(sibling(out, ".gp"),
                    "set datafile separator ','\nset key autotitle columnhead\n" + body);
}

template <typename T>
const T& expect(const ExperimentConfig& e, const char* command) {
  if (const T* p = std::get_if<T>(&e.experiment)) return *p;
  throw ConfigError("config: '" + std::string(command) + "' needs a \"" + command +
                    "\" experiment, found \"" + e.kind() + "\"");
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

nlohmann::json parse_json_file(const fs::path& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& err) {
    throw ConfigError("config: " + path.string() + ": malformed JSON: " + err.what());
  }
}

int cmd_run(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const ExperimentConfig e = load_experiment(o.config);
  const SearchConfig& cfg = expect<SearchConfig>(e, "run");
  const SearchRun run = run_search(cfg);
  const fs::path out = o.out;
  write_file_atomic(out, series_csv(run.p_marked));
  write_file_atomic(sibling(out, ".peaks.csv"), peaks_csv(run.peaks));

  nlohmann::json extra;
  extra["vertex_count"] = run.vertex_count;
  extra["steps"] = run.p_marked.size() - 1;
  if (auto peak = first_significant_peak(run)) {
    const auto reps = amplification_estimate(peak->probability);
    extra["first_significant_peak"] = {
        {"time", peak->time}, {"probability", peak->probability}, {"amplification_estimate", reps}};
    std::cout << "first significant peak: t=" << peak->time << " p=" << format_double(peak->probability)
              << " repetitions~" << reps << "\n";
  } else {
    extra["first_significant_peak"] = nullptr;
    std::cout << "first significant peak: none\n";
  }
  if (o.gnuplot) {
    write_gnuplot(out, "set xlabel 't'\nset ylabel 'p_marked'\nplot '" + out.filename().string() +
                           "' using 1:2 with lines\n");
  }
  write_sidecar(out, "run", o, elapsed(t0), extra);
  return 0;
}

int cmd_sweep(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const ExperimentConfig e = load_experiment(o.config);
  const SweepConfig& cfg = expect<SweepConfig>(e, "sweep");
  const auto rows = run_sweep(cfg, o.parallel);
  const fs::path out = o.out;
  write_file_atomic(out, sweep_csv(rows));

  nlohmann::json missing = nlohmann::json::array();
  for (const auto& r : rows) {
    if (!r.detected) {
      missing.push_back(r.n);
      std::cerr << "warning: n=" << r.n << ": no significant peak; row holds the global maximum\n";
    }
  }
  if (o.gnuplot) {
    const std::string f = out.filename().string();
    write_gnuplot(out,
                  "set multiplot layout 1,2\n"
                  "set xlabel 'log2 N'\nset ylabel 'peak probability'\n"
                  "plot '" + f + "' using (log($1)/log(2)):3 with points\n"
                  "set xlabel 'sqrt N'\nset ylabel 'peak time'\n"
                  "plot '" + f + "' using (sqrt($1)):4 with points\n"
                  "unset multiplot\n");
  }
  write_sidecar(out, "sweep", o, elapsed(t0), {{"instances", rows.size()}, {"no_significant_peak", missing}});
  std::cout << rows.size() << " instances\n";
  return 0;
}

int cmd_scan(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const ExperimentConfig e = load_experiment(o.config);
  const ScanConfig& cfg = expect<ScanConfig>(e, "scan");
  const auto configs = cfg.expand();
  std::vector<std::vector<double>> series;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    series.push_back(run_search(configs[i]).p_marked);
    labels.push_back(format_double(cfg.values[i]));
  }
  const fs::path out = o.out;
  write_file_atomic(out, wide_csv(labels, series));
  const char* name = cfg.parameter == ScanParameter::Delta ? "delta" : "phi";
  for (std::size_t i = 0; i < series.size(); ++i) {
    double m = 0.0;
    for (double v : series[i]) m = std::max(m, v);
    std::cout << name << '=' << labels[i] << " max p_marked=" << format_double(m) << "\n";
  }
  if (o.gnuplot) {
    std::string plot = "set xlabel 't'\nset ylabel 'p_marked'\nplot ";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      plot += (i ? ", '" : "'") + out.filename().string() + "' using 1:" + std::to_string(i + 2) +
              " with lines";
    }
    write_gnuplot(out, plot + "\n");
  }
  write_sidecar(out, "scan", o, elapsed(t0), {{"parameter", name}, {"series", labels.size()}});
  return 0;
}

int cmd_fit(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  fs::path input;
  FitModel model = FitModel::InverseLog2;
  bool have_model = false;
  if (!o.config.empty()) {
    const ExperimentConfig e = load_experiment(o.config);
    const FitConfig& cfg = expect<FitConfig>(e, "fit");
    input = cfg.input;
    model = cfg.model;
    have_model = true;
  }
  if (!o.input.empty()) input = o.input;
  if (!o.model.empty()) {
    model = fit_model_from_string(o.model);
    have_model = true;
  }
  if (input.empty()) throw ConfigError("fit: no input (use --config or --input)");
  if (!have_model) throw ConfigError("fit: no model (use --config or --model)");

  const auto points = parse_sweep_csv(read_file(input));
  const ScalingFit f = fit(points, model);
  const fs::path out = o.out;
  write_file_atomic(out, nlohmann::json(f).dump(2) + "\n");

  std::cout << to_string(f.model);
  for (double c : f.prefactors) std::cout << ' ' << format_double(c);
  if (f.breakpoint) std::cout << ' ' << format_double(*f.breakpoint);
  std::cout << ' ' << format_double(f.rms_residual) << "\n";
  write_sidecar(out, "fit", o, elapsed(t0), {{"input", input.string()}});
  return 0;
}

// Prints one line per violation; exit 3 when there is any.
int cmd_validate(const Options& o) {
  const nlohmann::json j = parse_json_file(o.config);
  std::vector<GraphSpec> specs;
  std::vector<SearchConfig> searches;
  if (j.is_object() && j.size() == 1 && j.contains("graph")) {
    try {
      specs.push_back(j.at("graph").get<GraphSpec>());
    } catch (const ConfigError& e) {
      throw ConfigError(std::string("graph.") + e.what());
    }
  } else {
    const ExperimentConfig e = parse_experiment(j, fs::path(o.config).parent_path());
    if (const auto* run = std::get_if<SearchConfig>(&e.experiment)) {
      searches.push_back(*run);
    } else if (const auto* sweep = std::get_if<SweepConfig>(&e.experiment)) {
      searches = expand_sweep(*sweep);
    } else if (const auto* scan = std::get_if<ScanConfig>(&e.experiment)) {
      searches = scan->expand();
    } else {
      throw ConfigError("validate: a fit config has no graph to validate");
    }
    for (const auto& s : searches) specs.push_back(s.graph);
  }

  std::size_t bad = 0;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const PortedGraph g = build_graph(specs[i]);
    const auto violations = validate_graph(g);
    const std::string what = describe(specs[i]);
    for (const auto& v : violations) std::cout << what << ": " << to_string(v) << "\n";
    if (i < searches.size()) search_coins(searches[i], g).validate(g);
    if (violations.empty()) {
      std::cout << what << ": ok (" << g.vertex_count() << " vertices, " << g.label_count() << " labels)\n";
    }
    bad += violations.size();
  }
  return bad == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coined quantum-walk spatial search simulator"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_out) {
    sub->add_option("--config", o.config, "Experiment config (JSON)")->check(CLI::ExistingFile);
    auto* out = sub->add_option("--out", o.out, "Output path");
    if (needs_out) out->required();
    sub->add_flag("--gnuplot", o.gnuplot, "Also write a gnuplot script next to the output");
  };

  auto* run = app.add_subcommand("run", "Single search: t,p_marked CSV plus peaks CSV");
  add_common(run, true);
  run->get_option("--config")->required();
  auto* sweep = app.add_subcommand("sweep", "Size sweep: n,edges,peak_prob,peak_time CSV");
  add_common(sweep, true);
  sweep->get_option("--config")->required();
  sweep->add_option("--parallel", o.parallel, "Concurrent instances")->check(CLI::PositiveNumber);
  auto* scan = app.add_subcommand("scan", "delta/phi scan: wide t,p[v1],... CSV");
  add_common(scan, true);
  scan->get_option("--config")->required();
  auto* fit = app.add_subcommand("fit", "Fit a sweep CSV; writes a JSON report");
  add_common(fit, true);
  fit->add_option("--input", o.input, "Sweep CSV (overrides the config)");
  fit->add_option("--model", o.model, "inverse_log2 | sqrt_n | piecewise_sqrt_n | linear_n");
  auto* validate = app.add_subcommand("validate", "Check graph invariants for a config");
  validate->add_option("--config", o.config, "Experiment or {\"graph\": ...} config")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) return cmd_run(o);
    if (*sweep) return cmd_sweep(o);
    if (*scan) return cmd_scan(o);
    if (*fit) return cmd_fit(o);
    if (*validate) return cmd_validate(o);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
