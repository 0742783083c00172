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

#include "sqc/kernels.hpp"

namespace sqc::kernels {

namespace {

inline Elem add_one(const AddContext& ctx, Elem a, Elem b) noexcept {
  switch (ctx.kind) {
    case FieldKind::prime: {
      const std::uint32_t s = std::uint32_t{a} + b;
      return static_cast<Elem>(s >= ctx.p ? s - ctx.p : s);
    }
    case FieldKind::binary:
      return static_cast<Elem>(a ^ b);
    case FieldKind::extension:
      break;
  }
  return ctx.field->add(a, b);
}

void add_scalar(const AddContext& ctx, Elem* dst, const Elem* src, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) dst[j] = add_one(ctx, dst[j], src[j]);
}

std::size_t add_weight_scalar(const AddContext& ctx, Elem* dst, const Elem* src, std::size_t n) {
  std::size_t w = 0;
  for (std::size_t j = 0; j < n; ++j) {
    dst[j] = add_one(ctx, dst[j], src[j]);
    w += dst[j] != 0;
  }
  return w;
}

std::size_t weight_scalar(const Elem* v, std::size_t n) {
  std::size_t w = 0;
  for (std::size_t j = 0; j < n; ++j) w += v[j] != 0;
  return w;
}

constexpr KernelTable kScalar{"scalar", add_scalar, add_weight_scalar, weight_scalar};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

void scale(const Field& field, Elem c, Elem* dst, const Elem* src, std::size_t n) {
  if (c == 0) {
    for (std::size_t j = 0; j < n; ++j) dst[j] = 0;
    return;
  }
  if (c == 1) {
    for (std::size_t j = 0; j < n; ++j) dst[j] = src[j];
    return;
  }
  for (std::size_t j = 0; j < n; ++j) dst[j] = field.mul(c, src[j]);
}

void axpy(const Field& field, Elem c, Elem* dst, const Elem* src, Elem* tmp, std::size_t n) {
  if (c == 0) return;
  const auto ctx = AddContext::of(field);
  if (c == 1) {
    active().add(ctx, dst, src, n);
    return;
  }
  scale(field, c, tmp, src, n);
  active().add(ctx, dst, tmp, n);
}

}  // namespace sqc::kernels
