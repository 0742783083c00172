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

#include <arm_neon.h>

#include "sqc/kernels.hpp"

namespace sqc::kernels {

namespace {

inline uint16x8_t add_mod(uint16x8_t a, uint16x8_t b, uint16x8_t p) {
  const uint16x8_t gap = vsubq_u16(p, b);
  const uint16x8_t ge = vcgeq_u16(a, gap);
  return vbslq_u16(ge, vsubq_u16(a, gap), vaddq_u16(a, b));
}

inline std::size_t nonzero_lanes(uint16x8_t v) {
  const uint16x8_t nz = vtstq_u16(v, v);  // all-ones where v != 0
  return vaddvq_u16(vshrq_n_u16(nz, 15));
}

void add_neon(const AddContext& ctx, Elem* dst, const Elem* src, std::size_t n) {
  if (ctx.kind == FieldKind::extension) {
    scalar_table().add(ctx, dst, src, n);
    return;
  }
  std::size_t j = 0;
  if (ctx.kind == FieldKind::prime) {
    const uint16x8_t p = vdupq_n_u16(static_cast<std::uint16_t>(ctx.p));
    for (; j + 8 <= n; j += 8) vst1q_u16(dst + j, add_mod(vld1q_u16(dst + j), vld1q_u16(src + j), p));
  } else {
    for (; j + 8 <= n; j += 8) vst1q_u16(dst + j, veorq_u16(vld1q_u16(dst + j), vld1q_u16(src + j)));
  }
  if (j < n) scalar_table().add(ctx, dst + j, src + j, n - j);
}

std::size_t add_weight_neon(const AddContext& ctx, Elem* dst, const Elem* src, std::size_t n) {
  if (ctx.kind == FieldKind::extension) return scalar_table().add_weight(ctx, dst, src, n);
  std::size_t j = 0;
  std::size_t w = 0;
  if (ctx.kind == FieldKind::prime) {
    const uint16x8_t p = vdupq_n_u16(static_cast<std::uint16_t>(ctx.p));
    for (; j + 8 <= n; j += 8) {
      const uint16x8_t s = add_mod(vld1q_u16(dst + j), vld1q_u16(src + j), p);
      vst1q_u16(dst + j, s);
      w += nonzero_lanes(s);
    }
  } else {
    for (; j + 8 <= n; j += 8) {
      const uint16x8_t s = veorq_u16(vld1q_u16(dst + j), vld1q_u16(src + j));
      vst1q_u16(dst + j, s);
      w += nonzero_lanes(s);
    }
  }
  if (j < n) w += scalar_table().add_weight(ctx, dst + j, src + j, n - j);
  return w;
}

std::size_t weight_neon(const Elem* v, std::size_t n) {
  std::size_t j = 0;
  std::size_t w = 0;
  for (; j + 8 <= n; j += 8) w += nonzero_lanes(vld1q_u16(v + j));
  if (j < n) w += scalar_table().weight(v + j, n - j);
  return w;
}

constexpr KernelTable kNeon{"neon", add_neon, add_weight_neon, weight_neon};

}  // namespace

const KernelTable* neon_table() noexcept { return &kNeon; }

}  // namespace sqc::kernels
