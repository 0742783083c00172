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

#pragma once

#include <cstddef>
#include <cstdint>

#include "sqc/gf.hpp"

// Vector kernels for the additive group of F_q on element-index arrays.
//
// Every kernel has a scalar reference implementation. Prime and binary
// fields additionally get AVX2 (x86-64) or NEON (aarch64) variants, picked
// once at runtime. Odd-characteristic extension fields always run the scalar
// path. Set SQC_FORCE_SCALAR=1 to pin the scalar table.

namespace sqc::kernels {

struct AddContext {
  FieldKind kind = FieldKind::prime;
  std::uint32_t p = 2;
  const Field* field = nullptr;

  static AddContext of(const Field& f) noexcept { return {f.kind(), f.p(), &f}; }
};

struct KernelTable {
  const char* isa;
  /// dst[j] += src[j]
  void (*add)(const AddContext& ctx, Elem* dst, const Elem* src, std::size_t n);
  /// dst[j] += src[j], returns the number of nonzero dst[j] afterwards.
  std::size_t (*add_weight)(const AddContext& ctx, Elem* dst, const Elem* src, std::size_t n);
  /// Number of nonzero entries.
  std::size_t (*weight)(const Elem* v, std::size_t n);
};

const KernelTable& scalar_table() noexcept;

/// nullptr when the variant is not compiled in or the CPU lacks it.
const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;

/// Table chosen at first use: the widest supported variant unless
/// SQC_FORCE_SCALAR is set.
const KernelTable& active() noexcept;

/// dst[j] = c * src[j]. Scalar on all targets (a table lookup per entry).
void scale(const Field& field, Elem c, Elem* dst, const Elem* src, std::size_t n);

/// dst[j] += c * src[j], using tmp (n entries) as scratch.
void axpy(const Field& field, Elem c, Elem* dst, const Elem* src, Elem* tmp, std::size_t n);

}  // namespace sqc::kernels
