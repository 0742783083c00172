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
#include <memory>
#include <optional>
#include <vector>

#include "sqc/expsets.hpp"
#include "sqc/limits.hpp"
#include "sqc/witness.hpp"

namespace sqc {

struct Footprint {
  std::uint64_t value = 0;
  ExpVec argmin;  // lexicographically first minimiser
};

/// min over a in A of prod (q - a_j). Throws EmptySet and NotReduced.
Footprint footprint_bound(const MonomialSet& a);

/// All minimisers, lexicographic.
std::vector<ExpVec> footprint_argmins(const MonomialSet& a);

/// (q - b) q^(m-1-c) for s = c(q-1) + b. RangeError unless 0 <= s <= m(q-1).
std::uint64_t rm_min_distance(std::uint32_t q, std::size_t m, std::uint64_t s);

/// Closed-form dimension of HalfHyp_q(d, 2), checked against enumeration.
/// RangeError unless 1 <= d < q^2.
std::uint64_t halfhyp_dimension_formula(std::uint32_t q, std::uint64_t d);

enum class RmHypRelation { equal, hyp_strictly_larger };

/// Whether Hyp_q(d,2) is strictly larger than RM_q(t,2) for the d that
/// RM_q(t,2) attains: (t+5)/2 <= q <= (t+1)^2/4. RangeError unless t <= 2q-2.
RmHypRelation rm_vs_hyp_comparison(std::uint32_t q, std::uint64_t t);

/// Largest two-variable weighted RM set whose square has footprint bound >= d:
/// the full box for d = 1, RM with s = q - (d+1)/2 for odd d, B1 for even d.
/// RangeError unless 1 <= d < q.
MonomialSet best_wrm_square_design(std::uint32_t q, std::uint64_t d);

/// d < (2 - sqrt 2) q, decided as (2q - d)^2 > 2q^2. When true, asserts the
/// best WRM design is strictly larger than HalfHyp_q(d, 2).
bool wrm_beats_halfhyp(std::uint32_t q, std::uint64_t d);

enum class Effort { fb_only, certify, exhaustive };
enum class DistanceSource { certificate, exhaustive, formula, none };

const char* to_string(DistanceSource source) noexcept;

struct ParamsReport {
  std::uint32_t q = 0;
  std::size_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t fb = 0;
  ExpVec argmin;
  std::optional<std::uint64_t> d_exact;
  DistanceSource d_source = DistanceSource::none;
  std::optional<DistanceCertificate> certificate;
  std::shared_ptr<const ParamsReport> square;
};

/// n, k and FB always; the exact distance from a certificate (effort >=
/// certify) or from exhaustive search (effort = exhaustive, BudgetExceeded
/// propagates). Recurses once into (A+A)_q.
ParamsReport params_report(const MonomialSet& a, Effort effort, const Limits& limits = {});

}  // namespace sqc
