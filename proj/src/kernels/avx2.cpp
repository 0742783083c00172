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

#include <immintrin.h>

#include "sqc/kernels.hpp"

namespace sqc::kernels {

namespace {

// (a + b) mod p on 16 u16 lanes for a, b < p <= 65521. a + b may wrap u16,
// so compare a against p - b instead of the sum against p.
__attribute__((target("avx2"))) inline __m256i add_mod(__m256i a, __m256i b, __m256i p) {
  const __m256i gap = _mm256_sub_epi16(p, b);                  // p - b, in [1, p]
  const __m256i ge = _mm256_cmpeq_epi16(_mm256_max_epu16(a, gap), a);  // a >= p - b
  const __m256i sum = _mm256_add_epi16(a, b);
  const __m256i wrapped = _mm256_sub_epi16(a, gap);
  return _mm256_blendv_epi8(sum, wrapped, ge);
}

__attribute__((target("avx2"))) inline std::size_t nonzero_lanes(__m256i v) {
  const __m256i zero = _mm256_cmpeq_epi16(v, _mm256_setzero_si256());
  // two mask bits per u16 lane
  const unsigned mask = ~static_cast<unsigned>(_mm256_movemask_epi8(zero));
  return static_cast<std::size_t>(__builtin_popcount(mask)) / 2;
}

__attribute__((target("avx2"))) void add_avx2(const AddContext& ctx, Elem* dst, const Elem* src, std::size_t n) {
  if (ctx.kind == FieldKind::extension) {
    scalar_table().add(ctx, dst, src, n);
    return;
  }
  std::size_t j = 0;
  if (ctx.kind == FieldKind::prime) {
    const __m256i p = _mm256_set1_epi16(static_cast<short>(ctx.p));
    for (; j + 16 <= n; j += 16) {
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j));
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), add_mod(a, b, p));
    }
  } else {
    for (; j + 16 <= n; j += 16) {
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j));
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), _mm256_xor_si256(a, b));
    }
  }
  if (j < n) scalar_table().add(ctx, dst + j, src + j, n - j);
}

__attribute__((target("avx2"))) std::size_t add_weight_avx2(const AddContext& ctx, Elem* dst, const Elem* src,
                                                             std::size_t n) {
  if (ctx.kind == FieldKind::extension) return scalar_table().add_weight(ctx, dst, src, n);
  std::size_t j = 0;
  std::size_t w = 0;
  if (ctx.kind == FieldKind::prime) {
    const __m256i p = _mm256_set1_epi16(static_cast<short>(ctx.p));
    for (; j + 16 <= n; j += 16) {
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j));
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j));
      const __m256i s = add_mod(a, b, p);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), s);
      w += nonzero_lanes(s);
    }
  } else {
    for (; j + 16 <= n; j += 16) {
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + j));
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j));
      const __m256i s = _mm256_xor_si256(a, b);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + j), s);
      w += nonzero_lanes(s);
    }
  }
  if (j < n) w += scalar_table().add_weight(ctx, dst + j, src + j, n - j);
  return w;
}

__attribute__((target("avx2"))) std::size_t weight_avx2(const Elem* v, std::size_t n) {
  std::size_t j = 0;
  std::size_t w = 0;
  for (; j + 16 <= n; j += 16) w += nonzero_lanes(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + j)));
  if (j < n) w += scalar_table().weight(v + j, n - j);
  return w;
}

constexpr KernelTable kAvx2{"avx2", add_avx2, add_weight_avx2, weight_avx2};

}  // namespace

const KernelTable* avx2_table() noexcept {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace sqc::kernels
