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

#include <immintrin.h>

#include "tables.hpp"

// Two complex doubles per __m256d, interleaved (re, im, re, im).

namespace qwalk::kernels {
namespace {

inline const double* dp(const Amplitude* a) { return reinterpret_cast<const double*>(a); }
inline double* dp(Amplitude* a) { return reinterpret_cast<double*>(a); }

// x * (br + i bi) for both lanes of x.
inline __m256d cmul(__m256d x, __m256d br, __m256d bi) {
  const __m256d swapped = _mm256_permute_pd(x, 0b0101);
  return _mm256_fmaddsub_pd(x, br, _mm256_mul_pd(swapped, bi));
}

inline __m256d splat(Amplitude z) {
  return _mm256_setr_pd(z.real(), z.imag(), z.real(), z.imag());
}

inline Amplitude hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

void structured_coin(const Amplitude* in, Amplitude* out, std::size_t vertices,
                     std::uint32_t degree, Amplitude alpha, Amplitude beta) {
  const __m256d br = _mm256_set1_pd(beta.real());
  const __m256d bi = _mm256_set1_pd(beta.imag());
  const std::uint32_t pairs = degree / 2;
  const bool odd = degree % 2 != 0;
  for (std::size_t v = 0; v < vertices; ++v, in += degree, out += degree) {
    __m256d acc = _mm256_setzero_pd();
    for (std::uint32_t k = 0; k < pairs; ++k) acc = _mm256_add_pd(acc, _mm256_loadu_pd(dp(in + 2 * k)));
    Amplitude sum = hsum(acc);
    if (odd) sum += in[degree - 1];
    const __m256d shared = splat(alpha * sum);
    for (std::uint32_t k = 0; k < pairs; ++k) {
      const __m256d x = _mm256_loadu_pd(dp(in + 2 * k));
      _mm256_storeu_pd(dp(out + 2 * k), _mm256_add_pd(shared, cmul(x, br, bi)));
    }
    if (odd) out[degree - 1] = alpha * sum + beta * in[degree - 1];
  }
}

void dense_coin(const Amplitude* in, Amplitude* out, std::size_t vertices, std::uint32_t degree,
                const Amplitude* matrix) {
  const std::uint32_t pairs = degree / 2;
  for (std::size_t v = 0; v < vertices; ++v, in += degree, out += degree) {
    // Rows i and i+1 together: acc += (M[i][j], M[i+1][j]) * in[j].
    for (std::uint32_t k = 0; k < pairs; ++k) {
      const Amplitude* r0 = matrix + static_cast<std::size_t>(2 * k) * degree;
      const Amplitude* r1 = r0 + degree;
      __m256d acc = _mm256_setzero_pd();
      for (std::uint32_t j = 0; j < degree; ++j) {
        const __m256d m = _mm256_loadu2_m128d(dp(r1 + j), dp(r0 + j));
        acc = _mm256_add_pd(acc, cmul(m, _mm256_set1_pd(in[j].real()), _mm256_set1_pd(in[j].imag())));
      }
      _mm256_storeu_pd(dp(out + 2 * k), acc);
    }
    if (degree % 2 != 0) {
      const Amplitude* row = matrix + static_cast<std::size_t>(degree - 1) * degree;
      Amplitude acc = 0.0;
      for (std::uint32_t j = 0; j < degree; ++j) acc += row[j] * in[j];
      out[degree - 1] = acc;
    }
  }
}

void gather(const Amplitude* in, Amplitude* out, const std::uint32_t* src, std::size_t n) {
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const __m256d x = _mm256_loadu2_m128d(dp(in + src[j + 1]), dp(in + src[j]));
    _mm256_storeu_pd(dp(out + j), x);
  }
  for (; j < n; ++j) out[j] = in[src[j]];
}

double norm_squared(const Amplitude* in, std::size_t n) {
  const double* x = dp(in);
  const std::size_t m = 2 * n;
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 8 <= m; k += 8) {
    const __m256d u = _mm256_loadu_pd(x + k);
    const __m256d w = _mm256_loadu_pd(x + k + 4);
    a0 = _mm256_fmadd_pd(u, u, a0);
    a1 = _mm256_fmadd_pd(w, w, a1);
  }
  const Amplitude h = hsum(_mm256_add_pd(a0, a1));
  double s = h.real() + h.imag();
  for (; k < m; ++k) s += x[k] * x[k];
  return s;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{Isa::Avx2, structured_coin, dense_coin, gather, norm_squared};
  return table;
}

}  // namespace qwalk::kernels
