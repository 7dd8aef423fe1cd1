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

#include "qwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

struct Xy {
  double x;  // regressor: 1/log2 N, sqrt N or N
  double y;
};

// Least squares through the origin: c = sum(xy) / sum(x^2).
double slope(const std::vector<Xy>& d, std::size_t b, std::size_t e, double* sse) {
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = b; k < e; ++k) {
    sxy += d[k].x * d[k].y;
    sxx += d[k].x * d[k].x;
  }
  const double c = sxy / sxx;
  double s = 0.0;
  for (std::size_t k = b; k < e; ++k) s += (d[k].y - c * d[k].x) * (d[k].y - c * d[k].x);
  *sse = s;
  return c;
}

std::vector<ScalingPoint> sorted(std::vector<ScalingPoint> p) {
  std::stable_sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
  return p;
}

void require_points(const std::vector<ScalingPoint>& p, std::size_t min, std::string_view what) {
  if (p.size() < min) {
    throw ConfigError(std::string(what) + ": needs at least " + std::to_string(min) + " points, got " +
                      std::to_string(p.size()));
  }
  for (const auto& q : p) {
    if (q.n < 2) throw ConfigError(std::string(what) + ": n must be >= 2");
  }
  if (std::all_of(p.begin(), p.end(), [&](const auto& q) { return q.n == p.front().n; })) {
    throw ConfigError(std::string(what) + ": all points have the same n");
  }
}

ScalingFit single(FitModel model, const std::vector<Xy>& d) {
  ScalingFit f;
  f.model = model;
  f.prefactors = {slope(d, 0, d.size(), &f.sse)};
  f.rms_residual = std::sqrt(f.sse / static_cast<double>(d.size()));
  return f;
}

}  // namespace

std::string_view to_string(FitModel m) {
  switch (m) {
    case FitModel::InverseLog2: return "inverse_log2";
    case FitModel::SqrtN: return "sqrt_n";
    case FitModel::PiecewiseSqrtN: return "piecewise_sqrt_n";
    case FitModel::LinearN: return "linear_n";
  }
  return "inverse_log2";
}

FitModel fit_model_from_string(std::string_view name) {
  for (auto m : {FitModel::InverseLog2, FitModel::SqrtN, FitModel::PiecewiseSqrtN, FitModel::LinearN}) {
    if (name == to_string(m)) return m;
  }
  if (name == "inverse_log") return FitModel::InverseLog2;
  if (name == "sqrt") return FitModel::SqrtN;
  if (name == "piecewise_sqrt") return FitModel::PiecewiseSqrtN;
  if (name == "linear") return FitModel::LinearN;
  throw ConfigError("model: unknown fit model '" + std::string(name) + "'");
}

ScalingFit fit_inverse_log(const std::vector<ScalingPoint>& points) {
  require_points(points, 3, "inverse_log2 fit");
  std::vector<Xy> d;
  for (const auto& p : points) d.push_back({1.0 / std::log2(static_cast<double>(p.n)), p.peak_probability});
  return single(FitModel::InverseLog2, d);
}

ScalingFit fit_sqrt(const std::vector<ScalingPoint>& points) {
  require_points(points, 2, "sqrt_n fit");
  std::vector<Xy> d;
  for (const auto& p : points) d.push_back({std::sqrt(static_cast<double>(p.n)), static_cast<double>(p.peak_time)});
  return single(FitModel::SqrtN, d);
}

ScalingFit fit_linear(const std::vector<ScalingPoint>& points) {
  require_points(points, 2, "linear_n fit");
  std::vector<Xy> d;
  for (const auto& p : points) d.push_back({static_cast<double>(p.n), static_cast<double>(p.peak_time)});
  return single(FitModel::LinearN, d);
}

ScalingFit fit_piecewise_sqrt(const std::vector<ScalingPoint>& points) {
  require_points(points, 6, "piecewise_sqrt_n fit");
  const auto p = sorted(points);
  std::vector<Xy> d;
  for (const auto& q : p) d.push_back({std::sqrt(static_cast<double>(q.n)), static_cast<double>(q.peak_time)});

  // Split positions k where the upper segment starts at a new distinct N.
  std::vector<std::size_t> starts;  // index of the first point of each distinct N
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k == 0 || p[k].n != p[k - 1].n) starts.push_back(k);
  }
  if (starts.size() < 4) throw ConfigError("piecewise_sqrt_n fit: insufficient span (need 4 distinct n)");

  ScalingFit best;
  best.model = FitModel::PiecewiseSqrtN;
  best.sse = std::numeric_limits<double>::infinity();
  for (std::size_t s = 2; s + 2 <= starts.size(); ++s) {
    const std::size_t k = starts[s];
    double lo = 0.0, hi = 0.0;
    const double c1 = slope(d, 0, k, &lo);
    const double c2 = slope(d, k, d.size(), &hi);
    if (lo + hi < best.sse) {
      best.sse = lo + hi;
      best.prefactors = {c1, c2};
      best.breakpoint = d[k].x;
    }
  }
  best.rms_residual = std::sqrt(best.sse / static_cast<double>(d.size()));
  return best;
}

ScalingFit fit(const std::vector<ScalingPoint>& points, FitModel model) {
  switch (model) {
    case FitModel::InverseLog2: return fit_inverse_log(points);
    case FitModel::SqrtN: return fit_sqrt(points);
    case FitModel::PiecewiseSqrtN: return fit_piecewise_sqrt(points);
    case FitModel::LinearN: return fit_linear(points);
  }
  throw ConfigError("model: unknown");
}

void to_json(nlohmann::json& j, const ScalingFit& f) {
  j = nlohmann::json::object();
  j["model"] = std::string(to_string(f.model));
  j["prefactors"] = f.prefactors;
  j["breakpoint"] = f.breakpoint ? nlohmann::json(*f.breakpoint) : nlohmann::json(nullptr);
  j["rms_residual"] = f.rms_residual;
}

double edges_per_vertex(GraphKind kind, int base_degree) {
  switch (kind) {
    case GraphKind::Torus: return 2.0;
    case GraphKind::TorusDiagonal: return 4.0;
    case GraphKind::HexTorus: return 1.5;
    case GraphKind::Bethe: (void)base_degree; return 1.0;  // tree: N - 1 edges
    case GraphKind::LineReflecting:
    case GraphKind::Cycle: return 1.0;
    case GraphKind::Custom: break;
  }
  return 0.0;
}

KinkReport kink_edge_report(const std::vector<KinkInput>& fits) {
  KinkReport r;
  for (const auto& f : fits) {
    KinkRow row;
    row.structure = f.structure;
    row.breakpoint_n = f.breakpoint_sqrt_n * f.breakpoint_sqrt_n;
    row.edges = edges_per_vertex(f.kind, f.base_degree) * row.breakpoint_n;
    if (f.kind == GraphKind::Bethe) row.edges = row.breakpoint_n - 1.0;
    row.ports = 2.0 * row.edges;
    r.rows.push_back(row);
  }
  auto agree = [&](auto member) {
    if (r.rows.empty()) return false;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& row : r.rows) {
      lo = std::min(lo, row.*member);
      hi = std::max(hi, row.*member);
    }
    return lo > 0.0 && hi / lo <= 1.25;
  };
  r.edges_agree = agree(&KinkRow::edges);
  r.ports_agree = agree(&KinkRow::ports);
  double de = 0.0, dp = 0.0;
  for (const auto& row : r.rows) {
    de += std::abs(std::log(row.edges / r.reference));
    dp += std::abs(std::log(row.ports / r.reference));
  }
  r.closer_to_reference = dp < de ? "ports" : "edges";
  return r;
}

std::string format_kink_report(const KinkReport& r) {
  std::ostringstream os;
  os << "structure,breakpoint_n,edges,ports\n";
  for (const auto& row : r.rows) {
    os << row.structure << ',' << row.breakpoint_n << ',' << row.edges << ',' << row.ports << '\n';
  }
  os << "# reference " << r.reference << "; edges agree within 25%: " << (r.edges_agree ? "yes" : "no")
     << "; ports agree within 25%: " << (r.ports_agree ? "yes" : "no")
     << "; closer to reference: " << r.closer_to_reference << '\n';
  return os.str();
}

std::vector<double> classical_line_distribution(int t) {
  if (t < 0) throw std::invalid_argument("classical_line_distribution: t must be >= 0");
  std::vector<double> p(static_cast<std::size_t>(2 * t + 1), 0.0);
  const double log_half_t = t * std::log(0.5);
  for (int k = 0; k <= t; ++k) {
    // k right-steps -> x = 2k - t.
    const double logc = std::lgamma(t + 1.0) - std::lgamma(k + 1.0) - std::lgamma(t - k + 1.0);
    p[static_cast<std::size_t>(2 * k)] = std::exp(logc + log_half_t);
  }
  return p;
}

double position_stddev(const std::vector<double>& dist, double origin) {
  double m0 = 0.0, m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const double x = static_cast<double>(i) - origin;
    m0 += dist[i];
    m1 += dist[i] * x;
    m2 += dist[i] * x * x;
  }
  const double mean = m1 / m0;
  return std::sqrt(std::max(0.0, m2 / m0 - mean * mean));
}

double dominant_period(const std::vector<double>& series) {
  const std::size_t n = series.size();
  if (n < 4) throw std::invalid_argument("dominant_period: series too short");
  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= static_cast<double>(n);

  const double nd = static_cast<double>(n);
  const double f_lo = 2.0 / nd;  // period n/2
  const double f_hi = 0.5;       // period 2
  const double df = 1.0 / (16.0 * nd);
  double best_f = f_lo, best_power = -1.0;
  for (double f = f_lo; f <= f_hi + 1e-15; f += df) {
    std::complex<double> acc = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      acc += (series[t] - mean) * std::polar(1.0, -2.0 * std::numbers::pi * f * static_cast<double>(t));
    }
    const double power = std::norm(acc);
    if (power > best_power) {
      best_power = power;
      best_f = f;
    }
  }
  return 1.0 / best_f;
}

}  // namespace qwalk
