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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sqc/expsets.hpp"
#include "sqc/limits.hpp"
#include "sqc/rational.hpp"

namespace sqc {

/// w . x <= b.
struct RationalHalfspace {
  std::vector<Rational> w;
  Rational b;

  friend bool operator==(const RationalHalfspace&, const RationalHalfspace&) = default;
};

struct RationalBox {
  Rational lo;
  Rational hi;

  friend bool operator==(const RationalBox&, const RationalBox&) = default;
};

/// Intersection of halfspaces, an optional box [lo, hi]^m, and an optional
/// product constraint prod (q - 2 x_i) >= d. The product constraint always
/// carries its own box [0, floor((q-1)/2)]^m, where every factor is positive.
struct ConvexRegion {
  std::size_t m = 0;
  std::vector<RationalHalfspace> halfspaces;
  std::optional<RationalBox> box;
  std::optional<std::uint64_t> product_d;

  /// Membership of the point y/2 (y integer, so half-integers are exact).
  bool contains_half(std::span<const std::int64_t> y, std::uint32_t q) const;

  friend bool operator==(const ConvexRegion&, const ConvexRegion&) = default;
};

ConvexRegion halfspace_region(RationalHalfspace h);
ConvexRegion product_region(std::size_t m, std::uint64_t d);

using Epsilon = std::vector<bool>;

/// {a in [0,q-1]^m : sum a_j <= s}.
MonomialSet reed_muller_set(std::uint32_t q, std::size_t m, std::uint64_t s);

/// {a in [0,q-1]^m : sum w_j a_j <= s}. Weights must be positive.
MonomialSet weighted_rm_set(std::uint32_t q, std::size_t m, const Rational& s, const std::vector<Rational>& weights);

/// {a in [0,q-1]^m : prod (q - a_j) >= d}; empty when d > q^m.
MonomialSet hyperbolic_set(std::uint32_t q, std::size_t m, std::uint64_t d);

/// {a in [0, floor((q-1)/2)]^m : prod (q - 2 a_j) >= d}. InvalidOrder if d >= q^m.
MonomialSet half_hyperbolic_set(std::uint32_t q, std::size_t m, std::uint64_t d);

enum class WrmVariant { b1, b2 };

/// Halfspace whose lattice points in [0,q-1]^2 are exactly the variant's set.
RationalHalfspace wrm_even_witness(std::uint32_t q, std::uint64_t d, WrmVariant variant);

/// With s = q - d/2:
///   B1 = {i + j < s} u {i + j = s, j < (q - d + 1)/2}, B2 the mirror image.
/// ParityError for odd d, RangeError unless 2 <= d < q. Asserts the set
/// equals the weighted RM set of wrm_even_witness.
MonomialSet wrm_even_optimal_set(std::uint32_t q, std::uint64_t d, WrmVariant variant);

/// {b + (q-1) eps : b in B, b_i > 0 wherever eps_i = 1}, unreduced.
MonomialSet b_epsilon_set(const MonomialSet& b, const Epsilon& eps);

/// 2A inside the union of all B_eps. False proves (A+A)_q is not inside B.
bool necessary_condition_check(const MonomialSet& a, const MonomialSet& b);

/// Integer points of [0,q-1]^m inside the region.
MonomialSet region_lattice_points(const ConvexRegion& c, std::uint32_t q, const Limits& limits = {});

/// A point 2c in [0,2q-2]^m with c in C and [2c]_q outside B, if any;
/// returned in doubled coordinates, lexicographically first.
std::optional<ExpVec> algorithm1_violation(const ConvexRegion& c, const MonomialSet& b, const Limits& limits = {});

/// No half-integer c with 2c in [0,2q-2]^m lies in C while [2c]_q is outside B.
bool algorithm1_verify(const ConvexRegion& c, const MonomialSet& b, const Limits& limits = {});

struct SquareViolation {
  ExpVec left;
  ExpVec right;
  ExpVec reduced_sum;
};

/// First pair (in A's order) whose reduced sum leaves B.
std::optional<SquareViolation> first_square_violation(const MonomialSet& a, const MonomialSet& b);

/// (A+A)_q inside B. Throws MismatchedAmbient.
bool check_square_designed(const MonomialSet& a, const MonomialSet& b);

/// Doubled points 2b in [0,2q-2]^m, 2b_i <= q-1 where eps_i = 0 and
/// 2b_i >= q where eps_i = 1, with prod (q + eps_i (q-1) - 2b_i) < d.
std::vector<ExpVec> d_epsilon_points(std::uint32_t q, std::size_t m, std::uint64_t d, const Epsilon& eps);

}  // namespace sqc
