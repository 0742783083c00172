// Copyright 2026 The squarecodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <cstring>

#include "sqc/kernels.hpp"

namespace sqc::kernels {

#if !(defined(__x86_64__) || defined(_M_X64))
const KernelTable* avx2_table() noexcept { return nullptr; }
#endif

#if !(defined(__aarch64__) || defined(_M_ARM64))
const KernelTable* neon_table() noexcept { return nullptr; }
#endif

const KernelTable& active() noexcept {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* force = std::getenv("SQC_FORCE_SCALAR");
    if (force != nullptr && std::strcmp(force, "0") != 0 && *force != '\0') return scalar_table();
    if (const auto* t = avx2_table()) return *t;
    if (const auto* t = neon_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

}  // namespace sqc::kernels
