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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "tables.hpp"

namespace qwalk::kernels {

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(QWALK_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("kernel ISA not available: " + std::string(to_string(isa)));
  }
#if defined(QWALK_HAVE_AVX2)
  if (isa == Isa::Avx2) return avx2_table();
#endif
  return scalar_table();
}

const KernelTable& active_kernels() {
  static const KernelTable& chosen = []() -> const KernelTable& {
    const char* env = std::getenv("QWALK_KERNELS");
    if (env != nullptr && std::string(env) == "scalar") return scalar_table();
    return kernels(isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar);
  }();
  return chosen;
}

}  // namespace qwalk::kernels
