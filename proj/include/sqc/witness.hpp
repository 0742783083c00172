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
#include <utility>
#include <vector>

#include "sqc/expsets.hpp"
#include "sqc/gf.hpp"

namespace sqc {

enum class CertificateKind { box, divisor, shifted, none };

const char* to_string(CertificateKind kind) noexcept;

/// X^hi - c X^lo on one axis.
struct Binomial {
  std::uint32_t hi = 0;
  std::uint32_t lo = 0;
  Elem c = 0;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// prod (X_axis - r) over roots, times prod of the binomials, all in X_axis.
struct AxisFactor {
  std::size_t axis = 0;
  std::vector<Elem> roots;
  std::vector<Binomial> binomials;

  friend bool operator==(const AxisFactor&, const AxisFactor&) = default;
};

/// A polynomial f = X^shift * prod(factors) claimed to lie in F_q[A] and to
/// evaluate to a codeword of weight claimed_weight. The claim is never
/// trusted: evalcode's weight_of_witness recomputes it.
struct DistanceCertificate {
  CertificateKind kind = CertificateKind::none;
  std::uint32_t q = 0;
  ExpVec alpha;  // footprint argmin the witness was built from
  ExpVec shift;  // monomial prefactor, zero unless kind == shifted
  std::vector<AxisFactor> factors;
  std::uint64_t claimed_weight = 0;

  friend bool operator==(const DistanceCertificate&, const DistanceCertificate&) = default;
};

/// Nonzero terms, sorted by exponent.
using SparsePoly = std::vector<std::pair<ExpVec, Elem>>;

/// Multiplies out the witness without reducing exponents.
SparsePoly expand_witness(const DistanceCertificate& cert, const Field& field);

}  // namespace sqc
