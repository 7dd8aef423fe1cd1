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

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace qwalk {

using Amplitude = std::complex<double>;

enum class CoinFamily {
  Hadamard,
  BiasedHadamard,
  SymmetricHadamard,
  SigmaX,
  Grover,
  MarkedGrover,
  PhasedMarkedGrover,
  BiasedGrover,
  Identity,
  NegatedHadamard,
  NegatedSymmetric,
};

std::string_view to_string(CoinFamily family);
CoinFamily coin_family_from_string(std::string_view name);

// True for families whose matrix exists at every dimension (Grover-type and
// Identity); false for the 2x2 Hadamard-type families.
bool is_degree_generic(CoinFamily family);

// Symbolic coin description. `delta` and `phi` are ignored by families that do
// not take them.
struct CoinSpec {
  CoinFamily family = CoinFamily::Grover;
  int degree = 4;
  double delta = 0.5;
  double phi = 0.0;

  // Same family, re-targeted at dimension `d`. Fixed-size families reject a
  // different dimension.
  CoinSpec with_degree(int d) const;

  friend bool operator==(const CoinSpec&, const CoinSpec&) = default;
};

// Dense d x d complex matrix, row-major.
class CoinMatrix {
 public:
  CoinMatrix() = default;
  CoinMatrix(int dimension, std::vector<Amplitude> entries);

  static CoinMatrix identity(int dimension);

  int dimension() const { return dimension_; }
  Amplitude operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * dimension_ + col)];
  }
  std::span<const Amplitude> entries() const { return entries_; }

  CoinMatrix adjoint() const;
  CoinMatrix operator*(const CoinMatrix& rhs) const;
  CoinMatrix operator-() const;
  CoinMatrix scaled(Amplitude factor) const;

  // Every coin in this project has the form alpha * J + beta * I (J the all-ones
  // matrix) except the 2x2 Hadamard family. When it does, the walk kernels use
  // the O(d) update out = alpha * sum(in) + beta * in.
  struct RankOneForm {
    Amplitude alpha;
    Amplitude beta;
  };
  std::optional<RankOneForm> rank_one_form() const;

  double max_abs_diff(const CoinMatrix& other) const;

  friend bool operator==(const CoinMatrix&, const CoinMatrix&) = default;

 private:
  int dimension_ = 0;
  std::vector<Amplitude> entries_;
};

// Builds the exact matrix of the named family. Throws CoinDomainError when a
// parameter is out of range (BiasedGroverRangeError for BiasedGrover below its
// lower bound) and InvariantError if the result is not unitary to 1e-12.
CoinMatrix realize_coin(const CoinSpec& spec);

// max |U^dagger U - I| <= tol.
bool check_unitary(const CoinMatrix& m, double tol);
double unitarity_defect(const CoinMatrix& m);

// Lower bound on delta for BiasedGrover at dimension d: 1 - 2/d.
double biased_grover_min_delta(int degree);

void to_json(nlohmann::json& j, const CoinSpec& spec);
void from_json(const nlohmann::json& j, CoinSpec& spec);

}  // namespace qwalk
