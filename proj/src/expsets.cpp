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

#include "sqc/expsets.hpp"

#include <algorithm>
#include <unordered_set>

#include "sqc/error.hpp"
#include "sqc/gf.hpp"

namespace sqc {

ExpVec::ExpVec(std::size_t m) : m_(static_cast<std::uint8_t>(m)) {
  require(m >= 1 && m <= kMaxVariables, ErrorKind::InvalidArgument,
          "number of variables must be in [1, " + std::to_string(kMaxVariables) + "]");
}

ExpVec::ExpVec(std::initializer_list<value_type> coords) : ExpVec(std::span<const value_type>(coords.begin(), coords.size())) {}

ExpVec::ExpVec(std::span<const value_type> coords) : ExpVec(coords.size()) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

bool ExpVec::dominated_by(const ExpVec& other) const noexcept {
  for (std::size_t i = 0; i < m_; ++i)
    if (c_[i] > other.c_[i]) return false;
  return true;
}

ExpVec operator+(const ExpVec& a, const ExpVec& b) {
  require(a.m_ == b.m_, ErrorKind::MismatchedAmbient, "adding exponent vectors of different length");
  ExpVec out(a.m_);
  for (std::size_t i = 0; i < a.m_; ++i) out.c_[i] = a.c_[i] + b.c_[i];
  return out;
}

std::string ExpVec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < m_; ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

std::size_t ExpVecHash::operator()(const ExpVec& v) const noexcept {
  std::size_t h = v.size();
  for (auto c : v) h = h * 1000003u ^ c;
  return h;
}

MonomialSet::MonomialSet(std::uint32_t q, std::size_t m) : q_(q), m_(m) {
  require(is_valid_field_size(q), ErrorKind::InvalidField, "q = " + std::to_string(q) + " is not a prime power in [2, 65536]");
  require(m >= 1 && m <= kMaxVariables, ErrorKind::InvalidArgument,
          "m = " + std::to_string(m) + " outside [1, " + std::to_string(kMaxVariables) + "]");
}

MonomialSet::MonomialSet(std::uint32_t q, std::size_t m, std::vector<ExpVec> exps) : MonomialSet(q, m) {
  for (const auto& v : exps)
    require(v.size() == m, ErrorKind::MismatchedAmbient, "exponent " + v.to_string() + " does not have m = " + std::to_string(m) + " coordinates");
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  exps_ = std::move(exps);
  reduced_ = std::all_of(exps_.begin(), exps_.end(), [q](const ExpVec& v) {
    return std::all_of(v.begin(), v.end(), [q](auto c) { return c <= q - 1; });
  });
}

bool MonomialSet::contains(const ExpVec& v) const { return std::binary_search(exps_.begin(), exps_.end(), v); }

bool MonomialSet::subset_of(const MonomialSet& other) const {
  require(q_ == other.q_ && m_ == other.m_, ErrorKind::MismatchedAmbient, "sets over different (q, m)");
  return std::includes(other.exps_.begin(), other.exps_.end(), exps_.begin(), exps_.end());
}

std::uint32_t reduce_exponent(std::uint64_t i, std::uint32_t q) {
  require(q >= 2, ErrorKind::InvalidArgument, "field size must be at least 2");
  if (i == 0) return 0;
  return static_cast<std::uint32_t>((i - 1) % (q - 1) + 1);
}

MonomialSet reduce_set(const MonomialSet& a) {
  std::vector<ExpVec> out;
  out.reserve(a.size());
  for (const auto& v : a) {
    ExpVec r(a.m());
    for (std::size_t i = 0; i < a.m(); ++i) r[i] = reduce_exponent(v[i], a.q());
    out.push_back(r);
  }
  return MonomialSet(a.q(), a.m(), std::move(out));
}

MonomialSet minkowski_sum(const MonomialSet& a, const MonomialSet& b) {
  require(a.q() == b.q() && a.m() == b.m(), ErrorKind::MismatchedAmbient, "Minkowski sum of sets over different (q, m)");
  std::unordered_set<ExpVec, ExpVecHash> seen;
  seen.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) seen.insert(x + y);
  return MonomialSet(a.q(), a.m(), std::vector<ExpVec>(seen.begin(), seen.end()));
}

MonomialSet square_support(const MonomialSet& a) {
  require(a.reduced(), ErrorKind::NotReduced, "square_support needs a reduced set");
  return reduce_set(minkowski_sum(a, a));
}

bool is_lower_set(const MonomialSet& a) {
  // Closed under decrementing one coordinate implies closed under <=.
  for (const auto& v : a) {
    for (std::size_t i = 0; i < a.m(); ++i) {
      if (v[i] == 0) continue;
      ExpVec w = v;
      --w[i];
      if (!a.contains(w)) return false;
    }
  }
  return true;
}

void for_each_in_box(std::size_t m, std::uint32_t bound, const std::function<void(const ExpVec&)>& fn) {
  ExpVec v(m);
  while (true) {
    fn(v);
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (v[i] < bound) {
        ++v[i];
        break;
      }
      v[i] = 0;
      if (i == 0) return;
    }
  }
}

MonomialSet full_box(std::uint32_t q, std::size_t m, const Limits& limits) {
  checked_power(q, m, limits.max_points);
  std::vector<ExpVec> out;
  for_each_in_box(m, q - 1, [&](const ExpVec& v) { out.push_back(v); });
  return MonomialSet(q, m, std::move(out));
}

}  // namespace sqc
