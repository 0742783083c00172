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

// Generators and brute-force oracles shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sqc/expsets.hpp"
#include "sqc/gf.hpp"

namespace sqc::testing {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

/// Staircase in [0, q-1]^2 from random non-increasing column heights.
inline MonomialSet random_lower_set_2d(std::uint32_t q, Rng& rng) {
  std::vector<ExpVec> out;
  std::uint32_t h = static_cast<std::uint32_t>(uniform(rng, 1, q));
  for (std::uint32_t i = 0; i < q && h > 0; ++i) {
    for (std::uint32_t j = 0; j < h; ++j) out.push_back({i, j});
    h = static_cast<std::uint32_t>(uniform(rng, 0, h));
  }
  return MonomialSet(q, 2, std::move(out));
}

/// Every nonempty staircase inside [0, bound]^2.
inline std::vector<MonomialSet> all_lower_sets_2d(std::uint32_t q, std::uint32_t bound) {
  std::vector<MonomialSet> out;
  std::vector<std::uint32_t> heights(bound + 1, 0);
  auto rec = [&](auto&& self, std::size_t col, std::uint32_t cap) -> void {
    if (col == heights.size()) {
      if (heights[0] == 0) return;
      std::vector<ExpVec> pts;
      for (std::uint32_t i = 0; i <= bound; ++i)
        for (std::uint32_t j = 0; j < heights[i]; ++j) pts.push_back({i, j});
      out.emplace_back(q, 2, std::move(pts));
      return;
    }
    for (std::uint32_t h = 0; h <= cap; ++h) {
      heights[col] = h;
      self(self, col + 1, h);
    }
  };
  rec(rec, 0, bound + 1);
  return out;
}

/// size distinct random exponents in [0, q-1]^m.
inline MonomialSet random_set(std::uint32_t q, std::size_t m, std::size_t size, Rng& rng) {
  std::vector<ExpVec> pts;
  while (true) {
    ExpVec v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = static_cast<std::uint32_t>(uniform(rng, 0, q - 1));
    pts.push_back(v);
    MonomialSet s(q, m, pts);
    if (s.size() >= size) return s;
  }
}

/// Minimum weight over all q^k - 1 nonzero messages, evaluating every
/// polynomial point by point with repeated multiplication.
inline std::uint64_t naive_min_distance(const MonomialSet& a) {
  const Field f(a.q());
  const std::uint32_t q = a.q();
  const std::size_t m = a.m();
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < m; ++i) n *= q;
  std::vector<std::vector<Elem>> rows;
  for (const auto& e : a) {
    std::vector<Elem> row(n);
    for (std::uint64_t j = 0; j < n; ++j) {
      std::uint64_t rest = j;
      Elem v = 1;
      for (std::size_t i = m; i-- > 0;) {
        const Elem x = static_cast<Elem>(rest % q);
        rest /= q;
        for (std::uint32_t t = 0; t < e[i]; ++t) v = f.mul(v, x);
      }
      row[j] = v;
    }
    rows.push_back(std::move(row));
  }
  std::vector<Elem> msg(rows.size(), 0);
  std::uint64_t best = UINT64_MAX;
  while (true) {
    std::size_t i = 0;
    while (i < msg.size() && msg[i] == q - 1) msg[i++] = 0;
    if (i == msg.size()) break;
    ++msg[i];
    std::uint64_t w = 0;
    for (std::uint64_t j = 0; j < n; ++j) {
      Elem s = 0;
      for (std::size_t r = 0; r < rows.size(); ++r) s = f.add(s, f.mul(msg[r], rows[r][j]));
      w += s != 0;
    }
    best = std::min(best, w);
  }
  return best;
}

inline std::vector<std::uint32_t> prime_powers_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 2; q <= limit; ++q)
    if (is_valid_field_size(q)) out.push_back(q);
  return out;
}

}  // namespace sqc::testing
