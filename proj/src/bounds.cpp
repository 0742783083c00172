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

#include "sqc/bounds.hpp"

#include <string>

#include "sqc/certify.hpp"
#include "sqc/error.hpp"
#include "sqc/evalcode.hpp"
#include "sqc/families.hpp"
#include "sqc/rational.hpp"

namespace sqc {

namespace {

std::uint64_t fb_value(const ExpVec& v, std::uint32_t q) {
  std::uint64_t prod = 1;
  for (auto c : v) prod *= q - c;
  return prod;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Footprint footprint_bound(const MonomialSet& a) {
  require(!a.empty(), ErrorKind::EmptySet, "footprint bound of an empty set");
  require(a.reduced(), ErrorKind::NotReduced, "footprint bound needs a reduced set");
  Footprint out{UINT64_MAX, {}};
  for (const auto& v : a) {
    const std::uint64_t f = fb_value(v, a.q());
    if (f < out.value) out = {f, v};
  }
  return out;
}

std::vector<ExpVec> footprint_argmins(const MonomialSet& a) {
  const std::uint64_t best = footprint_bound(a).value;
  std::vector<ExpVec> out;
  for (const auto& v : a)
    if (fb_value(v, a.q()) == best) out.push_back(v);
  return out;
}

std::uint64_t rm_min_distance(std::uint32_t q, std::size_t m, std::uint64_t s) {
  require(is_valid_field_size(q), ErrorKind::InvalidField, "q = " + std::to_string(q) + " is not a prime power");
  require(m >= 1, ErrorKind::RangeError, "m must be at least 1");
  require(s <= m * (q - 1ull), ErrorKind::RangeError,
          "s = " + std::to_string(s) + " exceeds m(q-1) = " + std::to_string(m * (q - 1ull)));
  std::uint64_t a = s / (q - 1);
  std::uint64_t b = s % (q - 1);
  if (a == m) {
    a = m - 1;
    b = q - 1;
  }
  const std::uint64_t d = (q - b) * ipow(q, m - 1 - a);
  // s = a(q-1) + 0 = (a-1)(q-1) + (q-1): both readings must agree.
  if (b == 0 && a >= 1) require(d == 1 * ipow(q, m - a), ErrorKind::InternalError, "decompositions disagree");
  if (b == q - 1 && a + 1 < m) require(d == q * ipow(q, m - 2 - a), ErrorKind::InternalError, "decompositions disagree");
  return d;
}

std::uint64_t halfhyp_dimension_formula(std::uint32_t q, std::uint64_t d) {
  require(is_valid_field_size(q), ErrorKind::InvalidField, "q = " + std::to_string(q) + " is not a prime power");
  const std::int64_t qq = q;
  require(d >= 1 && d < static_cast<std::uint64_t>(qq * qq), ErrorKind::RangeError, "need 1 <= d < q^2");
  const std::int64_t dd = static_cast<std::int64_t>(d);
  std::int64_t total = 0;
  const std::int64_t top = floor_div(qq * qq - dd, 2 * qq);
  for (std::int64_t i = 0; i <= top; ++i) total += floor_div(dd + (qq + 2) * (2 * i - qq), 4 * i - 2 * qq);
  const std::uint64_t k = half_hyperbolic_set(q, 2, d).size();
  require(total >= 0 && static_cast<std::uint64_t>(total) == k, ErrorKind::InternalError,
          "dimension formula gives " + std::to_string(total) + ", enumeration " + std::to_string(k));
  return k;
}

RmHypRelation rm_vs_hyp_comparison(std::uint32_t q, std::uint64_t t) {
  require(is_valid_field_size(q), ErrorKind::InvalidField, "q = " + std::to_string(q) + " is not a prime power");
  require(t <= 2ull * q - 2, ErrorKind::RangeError, "need 0 <= t <= 2q - 2");
  const bool larger = t + 5 <= 2ull * q && 4ull * q <= (t + 1) * (t + 1);
  return larger ? RmHypRelation::hyp_strictly_larger : RmHypRelation::equal;
}

MonomialSet best_wrm_square_design(std::uint32_t q, std::uint64_t d) {
  require(is_valid_field_size(q), ErrorKind::InvalidField, "q = " + std::to_string(q) + " is not a prime power");
  require(d >= 1 && d < q, ErrorKind::RangeError, "need 1 <= d < q, got d = " + std::to_string(d));
  MonomialSet a = d == 1       ? reed_muller_set(q, 2, 2ull * (q - 1))
                  : d % 2 == 1 ? reed_muller_set(q, 2, q - (d + 1) / 2)
                               : wrm_even_optimal_set(q, d, WrmVariant::b1);
  require(footprint_bound(square_support(a)).value >= d, ErrorKind::InternalError,
          "square of the WRM design misses the designed distance");
  return a;
}

bool wrm_beats_halfhyp(std::uint32_t q, std::uint64_t d) {
  require(is_valid_field_size(q), ErrorKind::InvalidField, "q = " + std::to_string(q) + " is not a prime power");
  require(d >= 1 && d < q, ErrorKind::RangeError, "need 1 <= d < q, got d = " + std::to_string(d));
  const std::uint64_t gap = 2ull * q - d;
  const bool beats = gap * gap > 2ull * q * q;
  if (beats) {
    const auto wrm = best_wrm_square_design(q, d).size();
    const auto half = half_hyperbolic_set(q, 2, d).size();
    require(wrm > half, ErrorKind::InternalError,
            "WRM design (" + std::to_string(wrm) + ") does not beat HalfHyp (" + std::to_string(half) + ")");
  }
  return beats;
}

const char* to_string(DistanceSource source) noexcept {
  switch (source) {
    case DistanceSource::certificate:
      return "certificate";
    case DistanceSource::exhaustive:
      return "exhaustive";
    case DistanceSource::formula:
      return "formula";
    case DistanceSource::none:
      return "none";
  }
  return "none";
}

namespace {

ParamsReport report_one(const MonomialSet& a, Effort effort, const Limits& limits) {
  ParamsReport r;
  r.q = a.q();
  r.m = a.m();
  r.n = checked_power(a.q(), a.m(), UINT64_MAX);
  r.k = a.size();
  const Footprint fb = footprint_bound(a);
  r.fb = fb.value;
  r.argmin = fb.argmin;
  if (effort == Effort::fb_only) return r;

  const CertifiedDistance cd = certified_min_distance(a, limits);
  if (cd.exact) {
    r.d_exact = cd.d;
    r.d_source = DistanceSource::certificate;
    r.certificate = cd.certificate;
  }
  if (effort == Effort::exhaustive) {
    const std::uint64_t d = min_distance_exhaustive(generator_matrix(a, limits), limits);
    require(!r.d_exact || *r.d_exact == d, ErrorKind::InternalError,
            "certificate weight " + std::to_string(*r.d_exact) + " differs from exhaustive distance " + std::to_string(d));
    r.d_exact = d;
    r.d_source = DistanceSource::exhaustive;
  }
  return r;
}

}  // namespace

ParamsReport params_report(const MonomialSet& a, Effort effort, const Limits& limits) {
  ParamsReport r = report_one(a, effort, limits);
  r.square = std::make_shared<const ParamsReport>(report_one(square_support(a), effort, limits));
  return r;
}

}  // namespace sqc
