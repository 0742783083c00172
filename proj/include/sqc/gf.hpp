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
#include <memory>
#include <span>
#include <vector>

#include "sqc/limits.hpp"

namespace sqc {

/// An element of F_q named by its index in the canonical enumeration.
/// Index 0 is zero and index 1 is one. For q = p^e with e > 1 the index is
/// sum c_k p^k where c_0 + c_1 x + ... is the residue modulo the field's
/// irreducible polynomial.
using Elem = std::uint16_t;

enum class FieldKind {
  prime,      // e = 1, addition mod p
  binary,     // p = 2, e > 1, addition is xor on indices
  extension,  // p odd, e > 1, digitwise addition mod p
};

/// F_q for a prime power q <= 2^16. Immutable once built; use Field::get to
/// share one instance per q.
class Field {
 public:
  explicit Field(std::uint32_t q);

  /// Cached instance for q. Thread-safe.
  static std::shared_ptr<const Field> get(std::uint32_t q);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }
  FieldKind kind() const noexcept { return kind_; }

  /// Monic irreducible modulus, coefficients c_0..c_e; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;  // throws InversionOfZero
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t n) const noexcept;

  /// Smallest-index element of multiplicative order q - 1.
  Elem primitive() const noexcept { return primitive_; }
  std::uint64_t order(Elem a) const;

  /// Element with index p^k, the k-th additive basis vector.
  Elem basis(std::uint32_t k) const noexcept;

 private:
  Elem ext_mul_slow(Elem a, Elem b) const;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  FieldKind kind_ = FieldKind::prime;
  std::vector<std::uint32_t> modulus_;
  Elem primitive_ = 1;
  std::vector<Elem> exp_;           // 2(q-1) entries, e > 1 only
  std::vector<std::uint32_t> log_;  // q entries, e > 1 only
};

using FieldPtr = std::shared_ptr<const Field>;

/// Returns (p, e) with q = p^e, or (0, 0) if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) noexcept;

bool is_valid_field_size(std::uint64_t q) noexcept;

/// A field element that remembers which field it belongs to, for the checked
/// arithmetic entry point.
struct FieldElement {
  std::uint32_t q = 0;
  Elem index = 0;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

enum class FieldOp { add, mul, inv, pow };

/// Checked arithmetic. For pow, b.index is read as the integer exponent.
/// Throws MismatchedFields if either operand is from another field and
/// InversionOfZero for inv(0).
FieldElement field_arithmetic(const Field& field, FieldElement a, FieldElement b, FieldOp op);

FieldElement primitive_element(const Field& field);

/// q^m points of F_q^m, lexicographic in element indices with the first
/// coordinate most significant. Codeword coordinates follow this order.
class PointList {
 public:
  PointList(std::uint32_t q, std::size_t m, std::uint64_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return m_; }
  std::span<const Elem> operator[](std::size_t j) const noexcept { return {coords_.data() + j * m_, m_}; }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<Elem> coords_;
};

/// Throws BudgetExceeded when q^m exceeds limits.max_points.
PointList enumerate_points(const Field& field, std::size_t m, const Limits& limits = {});

/// q^m, or BudgetExceeded if it exceeds cap (also guards overflow).
std::uint64_t checked_power(std::uint64_t q, std::size_t m, std::uint64_t cap);

}  // namespace sqc
