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

// Inner loops of the walk step. Each ISA provides the same table; the scalar
// one is the reference the others are tested against.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace qwalk::kernels {

using Amplitude = std::complex<double>;

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

struct KernelTable {
  Isa isa;

  // `vertices` consecutive blocks of `degree` amplitudes:
  //   out[i] = alpha * sum(in[block]) + beta * in[i]
  void (*structured_coin)(const Amplitude* in, Amplitude* out, std::size_t vertices,
                          std::uint32_t degree, Amplitude alpha, Amplitude beta);

  // Same blocking, general row-major degree x degree matrix.
  void (*dense_coin)(const Amplitude* in, Amplitude* out, std::size_t vertices,
                     std::uint32_t degree, const Amplitude* matrix);

  // out[j] = in[src[j]] for j < n.
  void (*gather)(const Amplitude* in, Amplitude* out, const std::uint32_t* src, std::size_t n);

  // sum |in[k]|^2
  double (*norm_squared)(const Amplitude* in, std::size_t n);
};

bool isa_supported(Isa isa);

// Throws std::invalid_argument when `isa` is not compiled in or not supported
// by this CPU.
const KernelTable& kernels(Isa isa);

// Best supported table. QWALK_KERNELS=scalar forces the reference kernels.
const KernelTable& active_kernels();

}  // namespace qwalk::kernels
