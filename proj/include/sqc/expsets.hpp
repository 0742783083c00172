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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sqc/limits.hpp"

namespace sqc {

/// Exponent vector (i_1, ..., i_m) of the monomial X_1^{i_1} ... X_m^{i_m}.
class ExpVec {
 public:
  using value_type = std::uint32_t;

  ExpVec() = default;
  explicit ExpVec(std::size_t m);
  ExpVec(std::initializer_list<value_type> coords);
  explicit ExpVec(std::span<const value_type> coords);

  std::size_t size() const noexcept { return m_; }
  value_type operator[](std::size_t i) const noexcept { return c_[i]; }
  value_type& operator[](std::size_t i) noexcept { return c_[i]; }

  const value_type* begin() const noexcept { return c_.data(); }
  const value_type* end() const noexcept { return c_.data() + m_; }

  /// Componentwise order.
  bool dominated_by(const ExpVec& other) const noexcept;

  friend ExpVec operator+(const ExpVec& a, const ExpVec& b);
  friend bool operator==(const ExpVec& a, const ExpVec& b) noexcept = default;
  /// Lexicographic, first coordinate most significant.
  friend auto operator<=>(const ExpVec& a, const ExpVec& b) noexcept = default;

  std::string to_string() const;

 private:
  std::array<value_type, kMaxVariables> c_{};
  std::uint8_t m_ = 0;
};

struct ExpVecHash {
  std::size_t operator()(const ExpVec& v) const noexcept;
};

/// A finite set A of exponent vectors over (q, m), kept duplicate-free and
/// lexicographically sorted. Exponents may exceed q - 1; reduced() says
/// whether every coordinate lies in [0, q-1].
class MonomialSet {
 public:
  MonomialSet(std::uint32_t q, std::size_t m);
  MonomialSet(std::uint32_t q, std::size_t m, std::vector<ExpVec> exps);

  std::uint32_t q() const noexcept { return q_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t size() const noexcept { return exps_.size(); }
  bool empty() const noexcept { return exps_.empty(); }
  bool reduced() const noexcept { return reduced_; }

  const std::vector<ExpVec>& exponents() const noexcept { return exps_; }
  auto begin() const noexcept { return exps_.begin(); }
  auto end() const noexcept { return exps_.end(); }
  const ExpVec& operator[](std::size_t i) const noexcept { return exps_[i]; }

  bool contains(const ExpVec& v) const;
  /// Every member of *this is in other (same q, m required).
  bool subset_of(const MonomialSet& other) const;

  friend bool operator==(const MonomialSet& a, const MonomialSet& b) = default;

 private:
  std::uint32_t q_;
  std::size_t m_;
  std::vector<ExpVec> exps_;
  bool reduced_ = true;
};

/// 0 stays 0; otherwise ((i - 1) mod (q - 1)) + 1, from z^q = z.
std::uint32_t reduce_exponent(std::uint64_t i, std::uint32_t q);

/// Coordinate-wise reduce_exponent, deduplicated. Same code, exponents in [0, q-1]^m.
MonomialSet reduce_set(const MonomialSet& a);

/// {a + b}, deduplicated and sorted; not reduced. Throws MismatchedAmbient.
MonomialSet minkowski_sum(const MonomialSet& a, const MonomialSet& b);

/// (A + A)_q, the support of the square code. Throws NotReduced.
MonomialSet square_support(const MonomialSet& a);

/// Downward closed under the componentwise order.
bool is_lower_set(const MonomialSet& a);

/// All of [0, q-1]^m. Throws BudgetExceeded past limits.max_points.
MonomialSet full_box(std::uint32_t q, std::size_t m, const Limits& limits = {});

/// Calls fn on every vector of [0, bound]^m in lexicographic order.
void for_each_in_box(std::size_t m, std::uint32_t bound, const std::function<void(const ExpVec&)>& fn);

}  // namespace sqc
