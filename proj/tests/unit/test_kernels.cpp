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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "qwalk/kernels.hpp"

using namespace qwalk::kernels;

namespace {

std::vector<Amplitude> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Amplitude> v(n);
  for (auto& a : v) a = {g(rng), g(rng)};
  return v;
}

double max_diff(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace

TEST_CASE("scalar kernels match a naive oracle") {
  const auto& s = kernels(Isa::Scalar);
  // Grover(4) on one block: alpha 1/2, beta -1.
  std::vector<Amplitude> in{1, 0, 0, 0}, out(4);
  s.structured_coin(in.data(), out.data(), 1, 4, 0.5, -1.0);
  CHECK(out == std::vector<Amplitude>{-0.5, 0.5, 0.5, 0.5});
  const Amplitude m[] = {0, 1, 1, 0};
  std::vector<Amplitude> two{{1, 2}, {3, 4}}, swapped(2);
  s.dense_coin(two.data(), swapped.data(), 1, 2, m);
  CHECK(swapped == std::vector<Amplitude>{{3, 4}, {1, 2}});
  std::vector<std::uint32_t> src{2, 0, 1};
  std::vector<Amplitude> g3{10, 20, 30}, o3(3);
  s.gather(g3.data(), o3.data(), src.data(), 3);
  CHECK(o3 == std::vector<Amplitude>{30, 10, 20});
  CHECK(s.norm_squared(two.data(), 2) == 30.0);
}

TEST_CASE("avx2 kernels match scalar") {
  if (!isa_supported(Isa::Avx2)) {
    MESSAGE("AVX2 not available on this machine; equivalence test skipped");
    return;
  }
  const auto& s = kernels(Isa::Scalar);
  const auto& v = kernels(Isa::Avx2);
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> g;

  for (std::uint32_t d = 1; d <= 8; ++d) {
    for (std::size_t vertices : {1u, 2u, 7u, 64u}) {
      CAPTURE(d);
      CAPTURE(vertices);
      const auto in = random_vector(d * vertices, rng);
      std::vector<Amplitude> a(in.size()), b(in.size());
      const Amplitude alpha{g(rng), g(rng)}, beta{g(rng), g(rng)};
      s.structured_coin(in.data(), a.data(), vertices, d, alpha, beta);
      v.structured_coin(in.data(), b.data(), vertices, d, alpha, beta);
      CHECK(max_diff(a, b) < 1e-13);

      const auto mat = random_vector(d * d, rng);
      s.dense_coin(in.data(), a.data(), vertices, d, mat.data());
      v.dense_coin(in.data(), b.data(), vertices, d, mat.data());
      CHECK(max_diff(a, b) < 1e-13);
    }
  }

  for (std::size_t n : {0u, 1u, 2u, 3u, 17u, 1000u}) {
    const auto in = random_vector(n, rng);
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Amplitude> a(n), b(n);
    s.gather(in.data(), a.data(), perm.data(), n);
    v.gather(in.data(), b.data(), perm.data(), n);
    CHECK(a == b);  // pure copies: bit-identical
    const double ns = s.norm_squared(in.data(), n), nv = v.norm_squared(in.data(), n);
    CHECK(std::abs(ns - nv) <= 1e-13 * std::max(1.0, ns));
  }
}

TEST_CASE("dispatch") {
  CHECK(isa_supported(Isa::Scalar));
  CHECK(kernels(Isa::Scalar).isa == Isa::Scalar);
  const auto& active = active_kernels();
  CHECK(isa_supported(active.isa));
  if (!isa_supported(Isa::Avx2)) CHECK_THROWS_AS(kernels(Isa::Avx2), std::invalid_argument);
}
