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

#include "sqc/families.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "sqc/error.hpp"
#include "sqc/gf.hpp"

namespace sqc {

namespace {

void check_ambient(std::uint32_t q, std::size_t m) {
  // Constructing an empty set validates q and m.
  MonomialSet probe(q, m);
  (void)probe;
}

std::uint64_t box_size(std::uint64_t side, std::size_t m, const Limits& limits) {
  return checked_power(side, m, limits.max_points);
}

MonomialSet select_box(std::uint32_t q, std::size_t m, std::uint32_t bound,
                       const std::function<bool(const ExpVec&)>& keep) {
  check_ambient(q, m);
  box_size(bound + 1ull, m, Limits{});
  std::vector<ExpVec> out;
  for_each_in_box(m, bound, [&](const ExpVec& v) {
    if (keep(v)) out.push_back(v);
  });
  return MonomialSet(q, m, std::move(out));
}

std::uint64_t saturating_pow(std::uint64_t q, std::size_t m) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (r > UINT64_MAX / q) return UINT64_MAX;
    r *= q;
  }
  return r;
}

void require_reduced(const MonomialSet& a, const char* what) {
  require(a.reduced(), ErrorKind::NotReduced, std::string(what) + " needs a reduced set");
}

void require_same_ambient(const MonomialSet& a, const MonomialSet& b) {
  require(a.q() == b.q() && a.m() == b.m(), ErrorKind::MismatchedAmbient,
          "sets over (q, m) = (" + std::to_string(a.q()) + ", " + std::to_string(a.m()) + ") and (" +
              std::to_string(b.q()) + ", " + std::to_string(b.m()) + ")");
}

}  // namespace

bool ConvexRegion::contains_half(std::span<const std::int64_t> y, std::uint32_t q) const {
  require(y.size() == m, ErrorKind::DimensionMismatch, "point dimension differs from region");
  for (const auto& h : halfspaces) {
    Rational lhs = 0;
    for (std::size_t i = 0; i < m; ++i) lhs += h.w[i] * y[i];
    if (lhs > 2 * h.b) return false;
  }
  if (box) {
    for (auto v : y)
      if (Rational(v) < 2 * box->lo || Rational(v) > 2 * box->hi) return false;
  }
  if (product_d) {
    const std::int64_t hi = 2 * static_cast<std::int64_t>((q - 1) / 2);
    std::uint64_t prod = 1;
    for (auto v : y) {
      if (v < 0 || v > hi) return false;
      prod *= static_cast<std::uint64_t>(q - v);
      if (prod >= *product_d) prod = *product_d;  // saturate, only the comparison matters
    }
    if (prod < *product_d) return false;
  }
  return true;
}

ConvexRegion halfspace_region(RationalHalfspace h) {
  ConvexRegion c;
  c.m = h.w.size();
  c.halfspaces.push_back(std::move(h));
  return c;
}

ConvexRegion product_region(std::size_t m, std::uint64_t d) {
  ConvexRegion c;
  c.m = m;
  c.product_d = d;
  return c;
}

MonomialSet reed_muller_set(std::uint32_t q, std::size_t m, std::uint64_t s) {
  return select_box(q, m, q - 1, [&](const ExpVec& v) {
    std::uint64_t sum = 0;
    for (auto c : v) sum += c;
    return sum <= s;
  });
}

MonomialSet weighted_rm_set(std::uint32_t q, std::size_t m, const Rational& s, const std::vector<Rational>& weights) {
  require(weights.size() == m, ErrorKind::DimensionMismatch,
          std::to_string(weights.size()) + " weights for m = " + std::to_string(m));
  for (const auto& w : weights) require(w > 0, ErrorKind::InvalidArgument, "weights must be positive");
  return select_box(q, m, q - 1, [&](const ExpVec& v) {
    Rational sum = 0;
    for (std::size_t i = 0; i < m; ++i) sum += weights[i] * static_cast<std::int64_t>(v[i]);
    return sum <= s;
  });
}

MonomialSet hyperbolic_set(std::uint32_t q, std::size_t m, std::uint64_t d) {
  require(d >= 1, ErrorKind::RangeError, "hyperbolic designed distance must be at least 1");
  return select_box(q, m, q - 1, [&](const ExpVec& v) {
    std::uint64_t prod = 1;
    for (auto c : v) prod *= q - c;
    return prod >= d;
  });
}

MonomialSet half_hyperbolic_set(std::uint32_t q, std::size_t m, std::uint64_t d) {
  require(d >= 1, ErrorKind::RangeError, "half-hyperbolic designed distance must be at least 1");
  check_ambient(q, m);
  require(d < saturating_pow(q, m), ErrorKind::InvalidOrder,
          "d = " + std::to_string(d) + " must be below q^m for a half-hyperbolic code");
  return select_box(q, m, (q - 1) / 2, [&](const ExpVec& v) {
    std::uint64_t prod = 1;
    for (auto c : v) prod *= q - 2 * c;
    return prod >= d;
  });
}

namespace {

void check_even_design(std::uint32_t q, std::uint64_t d) {
  require(d % 2 == 0, ErrorKind::ParityError, "d = " + std::to_string(d) + " is odd");
  require(d >= 2 && d < q, ErrorKind::RangeError, "need 2 <= d < q, got d = " + std::to_string(d));
}

}  // namespace

RationalHalfspace wrm_even_witness(std::uint32_t q, std::uint64_t d, WrmVariant variant) {
  check_even_design(q, d);
  const std::int64_t s = static_cast<std::int64_t>(q) - static_cast<std::int64_t>(d / 2);
  // Largest j with j < (q - d + 1)/2. The line i + j = s is tilted by 1/(2q)
  // so that it keeps exactly the points with j <= J.
  const std::int64_t big_j = (static_cast<std::int64_t>(q) - static_cast<std::int64_t>(d)) / 2;
  const Rational tilt(1, 2 * static_cast<std::int64_t>(q));
  RationalHalfspace h;
  h.w = variant == WrmVariant::b1 ? std::vector<Rational>{1, 1 + tilt} : std::vector<Rational>{1 + tilt, 1};
  h.b = Rational(s) + Rational(2 * big_j + 1, 4 * static_cast<std::int64_t>(q));
  return h;
}

MonomialSet wrm_even_optimal_set(std::uint32_t q, std::uint64_t d, WrmVariant variant) {
  check_even_design(q, d);
  const std::uint64_t s = q - d / 2;
  MonomialSet explicit_set = select_box(q, 2, q - 1, [&](const ExpVec& v) {
    const std::uint64_t i = variant == WrmVariant::b1 ? v[0] : v[1];
    const std::uint64_t j = variant == WrmVariant::b1 ? v[1] : v[0];
    return i + j < s || (i + j == s && 2 * j < q - d + 1);
  });
  const RationalHalfspace h = wrm_even_witness(q, d, variant);
  require(weighted_rm_set(q, 2, h.b, h.w) == explicit_set, ErrorKind::InternalError,
          "witness halfspace does not reproduce the even-d design");
  return explicit_set;
}

MonomialSet b_epsilon_set(const MonomialSet& b, const Epsilon& eps) {
  require_reduced(b, "b_epsilon_set");
  require(eps.size() == b.m(), ErrorKind::DimensionMismatch, "epsilon length differs from m");
  std::vector<ExpVec> out;
  for (const auto& v : b) {
    ExpVec w = v;
    bool ok = true;
    for (std::size_t i = 0; i < b.m(); ++i) {
      if (!eps[i]) continue;
      if (v[i] == 0) {
        ok = false;
        break;
      }
      w[i] += b.q() - 1;
    }
    if (ok) out.push_back(w);
  }
  return MonomialSet(b.q(), b.m(), std::move(out));
}

bool necessary_condition_check(const MonomialSet& a, const MonomialSet& b) {
  require_reduced(a, "necessary_condition_check");
  require_reduced(b, "necessary_condition_check");
  require_same_ambient(a, b);
  std::unordered_set<ExpVec, ExpVecHash> lifted;
  const std::size_t m = b.m();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Epsilon eps(m);
    for (std::size_t i = 0; i < m; ++i) eps[i] = (mask >> i) & 1u;
    for (const auto& v : b_epsilon_set(b, eps)) lifted.insert(v);
  }
  return std::all_of(a.begin(), a.end(), [&](const ExpVec& v) { return lifted.contains(v + v); });
}

MonomialSet region_lattice_points(const ConvexRegion& c, std::uint32_t q, const Limits& limits) {
  check_ambient(q, c.m);
  box_size(q, c.m, limits);
  std::vector<ExpVec> out;
  std::vector<std::int64_t> y(c.m);
  for_each_in_box(c.m, q - 1, [&](const ExpVec& v) {
    for (std::size_t i = 0; i < c.m; ++i) y[i] = 2 * static_cast<std::int64_t>(v[i]);
    if (c.contains_half(y, q)) out.push_back(v);
  });
  return MonomialSet(q, c.m, std::move(out));
}

std::optional<ExpVec> algorithm1_violation(const ConvexRegion& c, const MonomialSet& b, const Limits& limits) {
  require_reduced(b, "algorithm1_verify");
  require(c.m == b.m(), ErrorKind::MismatchedAmbient, "region and set have different m");
  const std::uint32_t q = b.q();
  box_size(2ull * q - 1, c.m, limits);
  std::optional<ExpVec> found;
  std::vector<std::int64_t> y(c.m);
  ExpVec reduced(c.m);
  for_each_in_box(c.m, 2 * q - 2, [&](const ExpVec& v) {
    if (found) return;
    for (std::size_t i = 0; i < c.m; ++i) {
      y[i] = v[i];
      reduced[i] = reduce_exponent(v[i], q);
    }
    if (!b.contains(reduced) && c.contains_half(y, q)) found = v;
  });
  return found;
}

bool algorithm1_verify(const ConvexRegion& c, const MonomialSet& b, const Limits& limits) {
  return !algorithm1_violation(c, b, limits).has_value();
}

std::optional<SquareViolation> first_square_violation(const MonomialSet& a, const MonomialSet& b) {
  require_reduced(a, "check_square_designed");
  require_reduced(b, "check_square_designed");
  require_same_ambient(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) {
      ExpVec sum = a[i] + a[j];
      for (std::size_t t = 0; t < sum.size(); ++t) sum[t] = reduce_exponent(sum[t], a.q());
      if (!b.contains(sum)) return SquareViolation{a[i], a[j], sum};
    }
  }
  return std::nullopt;
}

bool check_square_designed(const MonomialSet& a, const MonomialSet& b) {
  require_same_ambient(a, b);
  return square_support(a).subset_of(b);
}

std::vector<ExpVec> d_epsilon_points(std::uint32_t q, std::size_t m, std::uint64_t d, const Epsilon& eps) {
  check_ambient(q, m);
  require(d >= 1, ErrorKind::RangeError, "d must be at least 1");
  require(eps.size() == m, ErrorKind::DimensionMismatch, "epsilon length differs from m");
  box_size(2ull * q - 1, m, Limits{});
  std::vector<ExpVec> out;
  for_each_in_box(m, 2 * q - 2, [&](const ExpVec& v) {
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < m; ++i) {
      const bool high = v[i] >= q;
      if (high != static_cast<bool>(eps[i])) return;
      prod *= (eps[i] ? 2 * q - 1 : q) - v[i];
    }
    if (prod < d) out.push_back(v);
  });
  return out;
}

}  // namespace sqc
