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

#include "qwalk/coins.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "json_fields.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

constexpr double kUnitaryTol = 1e-12;

constexpr std::array<std::pair<CoinFamily, std::string_view>, 11> kFamilyNames{{
    {CoinFamily::Hadamard, "hadamard"},
    {CoinFamily::BiasedHadamard, "biased_hadamard"},
    {CoinFamily::SymmetricHadamard, "symmetric_hadamard"},
    {CoinFamily::SigmaX, "sigma_x"},
    {CoinFamily::Grover, "grover"},
    {CoinFamily::MarkedGrover, "marked_grover"},
    {CoinFamily::PhasedMarkedGrover, "phased_marked_grover"},
    {CoinFamily::BiasedGrover, "biased_grover"},
    {CoinFamily::Identity, "identity"},
    {CoinFamily::NegatedHadamard, "negated_hadamard"},
    {CoinFamily::NegatedSymmetric, "negated_symmetric"},
}};

bool takes_delta(CoinFamily f) {
  return f == CoinFamily::BiasedHadamard || f == CoinFamily::SymmetricHadamard ||
         f == CoinFamily::BiasedGrover || f == CoinFamily::NegatedSymmetric;
}

void check_delta(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw CoinDomainError("delta: " + std::to_string(delta) + " outside [0, 1]");
  }
}

CoinMatrix two_by_two(Amplitude a, Amplitude b, Amplitude c, Amplitude d) {
  return CoinMatrix(2, {a, b, c, d});
}

CoinMatrix grover(int d) {
  std::vector<Amplitude> e(static_cast<std::size_t>(d * d), Amplitude(2.0 / d));
  for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i * d + i)] -= 1.0;
  return CoinMatrix(d, std::move(e));
}

CoinMatrix biased_hadamard(double delta) {
  const double s = std::sqrt(delta);
  const double c = std::sqrt(1.0 - delta);
  return two_by_two(s, c, c, -s);
}

CoinMatrix symmetric_hadamard(double delta) {
  const Amplitude s = std::sqrt(delta);
  const Amplitude c(0.0, std::sqrt(1.0 - delta));
  return two_by_two(s, c, c, s);
}

// Symmetric unitary with constant diagonal delta and constant off-diagonal
// z = a + ib. Row norm: delta^2 + (d-1)|z|^2 = 1. Row orthogonality:
// 2 delta Re z + (d-2)|z|^2 = 0.
CoinMatrix biased_grover(int d, double delta) {
  const double z2 = (1.0 - delta * delta) / (d - 1);
  const double a = (d == 2) ? 0.0 : -(d - 2) * z2 / (2.0 * delta);
  const double b = std::sqrt(std::max(0.0, z2 - a * a));
  std::vector<Amplitude> e(static_cast<std::size_t>(d * d), Amplitude(a, b));
  for (int i = 0; i < d; ++i) e[static_cast<std::size_t>(i * d + i)] = delta;
  return CoinMatrix(d, std::move(e));
}

}  // namespace

std::string_view to_string(CoinFamily family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

CoinFamily coin_family_from_string(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  throw ConfigError("family: unknown coin family '" + std::string(name) + "'");
}

bool is_degree_generic(CoinFamily family) {
  switch (family) {
    case CoinFamily::Grover:
    case CoinFamily::MarkedGrover:
    case CoinFamily::PhasedMarkedGrover:
    case CoinFamily::BiasedGrover:
    case CoinFamily::Identity:
      return true;
    default:
      return false;
  }
}

CoinSpec CoinSpec::with_degree(int d) const {
  if (!is_degree_generic(family) && d != degree) {
    throw InvariantError(std::string(to_string(family)) + " coin has dimension " +
                         std::to_string(degree) + " but is assigned to a degree-" +
                         std::to_string(d) + " vertex");
  }
  CoinSpec out = *this;
  out.degree = d;
  return out;
}

CoinMatrix::CoinMatrix(int dimension, std::vector<Amplitude> entries)
    : dimension_(dimension), entries_(std::move(entries)) {
  if (dimension < 1 || entries_.size() != static_cast<std::size_t>(dimension) * dimension) {
    throw InvariantError("coin matrix must be square with dimension >= 1");
  }
}

CoinMatrix CoinMatrix::identity(int dimension) {
  std::vector<Amplitude> e(static_cast<std::size_t>(dimension) * dimension);
  for (int i = 0; i < dimension; ++i) e[static_cast<std::size_t>(i * dimension + i)] = 1.0;
  return CoinMatrix(dimension, std::move(e));
}

CoinMatrix CoinMatrix::adjoint() const {
  std::vector<Amplitude> e(entries_.size());
  for (int i = 0; i < dimension_; ++i)
    for (int j = 0; j < dimension_; ++j)
      e[static_cast<std::size_t>(j * dimension_ + i)] = std::conj((*this)(i, j));
  return CoinMatrix(dimension_, std::move(e));
}

CoinMatrix CoinMatrix::operator*(const CoinMatrix& rhs) const {
  if (rhs.dimension_ != dimension_) throw InvariantError("coin dimension mismatch in product");
  const int d = dimension_;
  std::vector<Amplitude> e(entries_.size());
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const Amplitude lhs = (*this)(i, k);
      for (int j = 0; j < d; ++j) e[static_cast<std::size_t>(i * d + j)] += lhs * rhs(k, j);
    }
  return CoinMatrix(d, std::move(e));
}

CoinMatrix CoinMatrix::operator-() const { return scaled(-1.0); }

CoinMatrix CoinMatrix::scaled(Amplitude factor) const {
  std::vector<Amplitude> e(entries_);
  for (auto& x : e) x *= factor;
  return CoinMatrix(dimension_, std::move(e));
}

std::optional<CoinMatrix::RankOneForm> CoinMatrix::rank_one_form() const {
  const int d = dimension_;
  if (d == 0) return std::nullopt;
  const Amplitude diag = (*this)(0, 0);
  const Amplitude off = d > 1 ? (*this)(0, 1) : Amplitude(0.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if ((*this)(i, j) != (i == j ? diag : off)) return std::nullopt;
    }
  return RankOneForm{off, diag - off};
}

double CoinMatrix::max_abs_diff(const CoinMatrix& other) const {
  if (other.dimension_ != dimension_) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
  return worst;
}

double biased_grover_min_delta(int degree) { return 1.0 - 2.0 / degree; }

CoinMatrix realize_coin(const CoinSpec& spec) {
  const bool two_dim = !is_degree_generic(spec.family);
  if (two_dim && spec.degree != 2) {
    throw CoinDomainError("degree: " + std::string(to_string(spec.family)) +
                          " requires degree 2, got " + std::to_string(spec.degree));
  }
  if (spec.degree < 1) throw CoinDomainError("degree: must be >= 1");
  if (takes_delta(spec.family)) check_delta(spec.delta);

  CoinMatrix m;
  switch (spec.family) {
    case CoinFamily::Hadamard:
      m = biased_hadamard(0.5);
      break;
    case CoinFamily::BiasedHadamard:
      m = biased_hadamard(spec.delta);
      break;
    case CoinFamily::SymmetricHadamard:
      m = symmetric_hadamard(spec.delta);
      break;
    case CoinFamily::NegatedHadamard:
      m = -biased_hadamard(0.5);
      break;
    case CoinFamily::NegatedSymmetric:
      m = -symmetric_hadamard(spec.delta);
      break;
    case CoinFamily::SigmaX:
      m = two_by_two(0.0, 1.0, 1.0, 0.0);
      break;
    case CoinFamily::Grover:
      m = grover(spec.degree);
      break;
    case CoinFamily::MarkedGrover:
      m = -grover(spec.degree);
      break;
    case CoinFamily::PhasedMarkedGrover:
      if (!(spec.phi >= 0.0 && spec.phi <= std::numbers::pi)) {
        throw CoinDomainError("phi: " + std::to_string(spec.phi) + " outside [0, pi]");
      }
      m = (-grover(spec.degree)).scaled(std::polar(1.0, spec.phi));
      break;
    case CoinFamily::BiasedGrover: {
      if (spec.degree < 2) throw CoinDomainError("degree: biased_grover requires degree >= 2");
      const double lo = biased_grover_min_delta(spec.degree);
      if (spec.delta < lo) {
        throw BiasedGroverRangeError("delta: biased_grover at degree " +
                                     std::to_string(spec.degree) + " requires delta >= " +
                                     std::to_string(lo) + ", got " + std::to_string(spec.delta));
      }
      m = biased_grover(spec.degree, spec.delta);
      break;
    }
    case CoinFamily::Identity:
      m = CoinMatrix::identity(spec.degree);
      break;
  }
  if (!check_unitary(m, kUnitaryTol)) {
    throw InvariantError(std::string(to_string(spec.family)) + " realization is not unitary");
  }
  return m;
}

double unitarity_defect(const CoinMatrix& m) {
  const CoinMatrix p = m.adjoint() * m;
  return p.max_abs_diff(CoinMatrix::identity(m.dimension()));
}

bool check_unitary(const CoinMatrix& m, double tol) { return unitarity_defect(m) <= tol; }

void to_json(nlohmann::json& j, const CoinSpec& spec) {
  j = nlohmann::json{{"family", std::string(to_string(spec.family))}, {"degree", spec.degree}};
  if (takes_delta(spec.family)) j["delta"] = spec.delta;
  if (spec.family == CoinFamily::PhasedMarkedGrover) j["phi"] = spec.phi;
}

void from_json(const nlohmann::json& j, CoinSpec& spec) {
  spec.family = coin_family_from_string(detail::required<std::string>(j, "family"));
  const int fallback_degree = is_degree_generic(spec.family) ? 4 : 2;
  spec.degree = detail::optional<int>(j, "degree", fallback_degree);
  spec.delta = detail::optional<double>(j, "delta", 0.5);
  spec.phi = detail::optional<double>(j, "phi", 0.0);
}

}  // namespace qwalk
