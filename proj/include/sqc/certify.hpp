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

#include "sqc/expsets.hpp"
#include "sqc/gf.hpp"
#include "sqc/limits.hpp"
#include "sqc/witness.hpp"

namespace sqc {

/// Number of roots of X^l - alpha^j in F_q, alpha = field.primitive():
/// gcd(l, q-1) when that divides j, else 0.
std::uint64_t root_count_binomial(std::uint64_t l, std::uint64_t j, const Field& field);

/// prod_i (X_i - P_1)...(X_i - P_{alpha_i}) over the first footprint argmin
/// whose box [0, alpha] lies in A, with P_t the t-th field element.
std::optional<DistanceCertificate> box_certificate(const MonomialSet& a, const Limits& limits = {});

/// Product of binomials with weight FB(A). Per axis one of: nothing,
/// prod_{t<k} (X^l - alpha^{lt}) with l | q-1 and kl <= q-1 (support
/// {0, l, ..., kl}), or X^l - X with l-1 | q-1 (support {1, l}).
std::optional<DistanceCertificate> divisor_certificate(const MonomialSet& a, const Limits& limits = {});

struct ShiftReduction {
  MonomialSet reduced;
  std::uint32_t shift = 0;
};

/// Subtracts s = min_a a_axis from that coordinate when s > 0. Note that
/// d(C_A) equals the distance of C_B restricted to points with x_axis != 0,
/// which can be smaller than d(C_B).
std::optional<ShiftReduction> shift_reduce(const MonomialSet& a, std::size_t axis);

/// Footprint bound on the grid where shifted axes range over F_q^*:
/// min over b in B of prod_{shifted} (q - 1 - b_j) prod_{others} (q - b_j).
std::uint64_t shifted_footprint_bound(const MonomialSet& b, const ExpVec& shift);

struct CertifiedDistance {
  std::uint64_t d = 0;  // exact when exact, else a lower bound
  bool exact = false;
  DistanceCertificate certificate;  // kind none when not exact
};

/// Shifts out every axis, then tries a box witness on the shifted grid and a
/// divisor witness on A. Every witness weight is re-evaluated.
CertifiedDistance certified_min_distance(const MonomialSet& a, const Limits& limits = {});

}  // namespace sqc
