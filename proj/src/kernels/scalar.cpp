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

#include "tables.hpp"

namespace qwalk::kernels {
namespace {

void structured_coin(const Amplitude* in, Amplitude* out, std::size_t vertices,
                     std::uint32_t degree, Amplitude alpha, Amplitude beta) {
  for (std::size_t v = 0; v < vertices; ++v, in += degree, out += degree) {
    Amplitude sum = 0.0;
    for (std::uint32_t i = 0; i < degree; ++i) sum += in[i];
    const Amplitude shared = alpha * sum;
    for (std::uint32_t i = 0; i < degree; ++i) out[i] = shared + beta * in[i];
  }
}

void dense_coin(const Amplitude* in, Amplitude* out, std::size_t vertices, std::uint32_t degree,
                const Amplitude* matrix) {
  for (std::size_t v = 0; v < vertices; ++v, in += degree, out += degree) {
    for (std::uint32_t i = 0; i < degree; ++i) {
      Amplitude acc = 0.0;
      const Amplitude* row = matrix + static_cast<std::size_t>(i) * degree;
      for (std::uint32_t j = 0; j < degree; ++j) acc += row[j] * in[j];
      out[i] = acc;
    }
  }
}

void gather(const Amplitude* in, Amplitude* out, const std::uint32_t* src, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) out[j] = in[src[j]];
}

double norm_squared(const Amplitude* in, std::size_t n) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += std::norm(in[k]);
  return s;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::Scalar, structured_coin, dense_coin, gather, norm_squared};
  return table;
}

}  // namespace qwalk::kernels
