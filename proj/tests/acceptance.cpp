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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "sqc/bounds.hpp"
#include "sqc/certify.hpp"
#include "sqc/error.hpp"
#include "sqc/evalcode.hpp"
#include "sqc/families.hpp"
#include "support.hpp"

using namespace sqc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.ok && secs > budget_s) {
    r.ok = false;
    r.detail = "took longer than " + std::to_string(budget_s) + " s";
  }
  failures += !r.ok;
  std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", r.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              r.detail.empty() ? "" : ": ", r.detail.c_str());
  std::fflush(stdout);
}

std::string params(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

// n and k by construction, d from the footprint bound closed by a box witness.
std::string certified_params(const MonomialSet& a) {
  const auto cert = box_certificate(a);
  if (!cert) return "no box certificate";
  const std::uint64_t fb = footprint_bound(a).value;
  const std::uint64_t w = weight_of_witness(*cert, a);
  if (w != fb) return "witness weight " + std::to_string(w) + " != FB " + std::to_string(fb);
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < a.m(); ++i) n *= a.q();
  return params(n, a.size(), fb);
}

Outcome c1() {
  Outcome o;
  const std::vector<std::pair<MonomialSet, std::string>> cases{
      {reed_muller_set(11, 2, 6), params(121, 28, 55)},
      {hyperbolic_set(11, 2, 6), params(121, 111, 6)},
      {hyperbolic_set(11, 2, 55), params(121, 30, 55)},
      {weighted_rm_set(11, 2, 15, {5, 3}), params(121, 13, 66)},
  };
  for (const auto& [a, expect] : cases) {
    const auto got = certified_params(a);
    o.expect(got == expect, "got " + got + ", expected " + expect);
  }
  return o;
}

Outcome c2() {
  Outcome o;
  const auto h12 = half_hyperbolic_set(11, 2, 12);
  o.expect(certified_params(h12) == params(121, 24, 56), "HalfHyp_11(12): " + certified_params(h12));
  const auto h6 = half_hyperbolic_set(11, 2, 6);
  const auto cd = certified_min_distance(h6);
  o.expect(cd.exact && cd.d == 49, "HalfHyp_11(6) distance " + std::to_string(cd.d));
  o.expect(h6.size() == 31, "HalfHyp_11(6) enumerates to " + std::to_string(h6.size()));
  o.expect(halfhyp_dimension_formula(11, 6) == 31, "dimension formula disagrees");
  return o;
}

Outcome c3() {
  Outcome o;
  const auto hyp = hyperbolic_set(11, 2, 6);
  for (const auto& [name, a] : {std::pair{"HalfHyp_11(6)", half_hyperbolic_set(11, 2, 6)},
                                std::pair{"B1(11,6)", wrm_even_optimal_set(11, 6, WrmVariant::b1)}}) {
    o.expect(check_square_designed(a, hyp), std::string(name) + " square leaves Hyp_11(6)");
    o.expect(footprint_bound(square_support(a)).value >= 6, std::string(name) + " square FB below 6");
  }
  return o;
}

Outcome c4() {
  Outcome o;
  testing::Rng rng(2024);
  int good = 0;
  for (int t = 0; t < 200; ++t) {
    const std::uint32_t q = std::vector<std::uint32_t>{3, 4, 5, 7}[t % 4];
    const auto a = testing::random_set(q, 2, testing::uniform(rng, 1, 8), rng);
    good += row_space_equal(schur_square_matrix(generator_matrix(a)), generator_matrix(square_support(a)));
  }
  o.expect(good == 200, std::to_string(good) + "/200");
  if (o.ok) o.detail = "200/200";
  return o;
}

Outcome c5() {
  Outcome o;
  auto check = [&](const MonomialSet& a) {
    const std::uint64_t fb = footprint_bound(a).value;
    const std::uint64_t d = min_distance_exhaustive(generator_matrix(a));
    const auto cert = box_certificate(a);
    const std::uint64_t w = cert ? weight_of_witness(*cert, a) : 0;
    o.expect(d == fb && w == fb, "q=" + std::to_string(a.q()) + " |A|=" + std::to_string(a.size()) + ": d=" +
                                     std::to_string(d) + " fb=" + std::to_string(fb) + " witness=" + std::to_string(w));
  };
  const auto all = testing::all_lower_sets_2d(3, 2);
  for (const auto& a : all) check(a);
  testing::Rng rng(5);
  for (int t = 0; t < 500; ++t) check(testing::random_lower_set_2d(t % 2 ? 5 : 4, rng));
  if (o.ok) o.detail = std::to_string(all.size()) + " lower sets at q=3, 500 random at q=4,5";
  return o;
}

Outcome c6() {
  Outcome o;
  for (std::uint32_t q : {3u, 4u, 5u})
    for (std::uint64_t s = 0; s <= 2 * (q - 1); ++s) {
      const std::uint64_t d = min_distance_exhaustive(generator_matrix(reed_muller_set(q, 2, s)));
      o.expect(d == rm_min_distance(q, 2, s), "q=" + std::to_string(q) + " s=" + std::to_string(s));
    }
  return o;
}

// Every distinct set {(i,j) in [0,q-1]^2 : w i + j <= s}, w > 0 rational.
// The order of the points by w i + j only changes at slopes a/b with
// 1 <= a, b <= q-1, so one w per open interval between them (plus one on
// each side) and every prefix of the sorted order gives them all.
std::vector<MonomialSet> all_wrm_sets(std::uint32_t q) {
  std::set<Rational> crit;
  for (std::int64_t a = 1; a < q; ++a)
    for (std::int64_t b = 1; b < q; ++b) crit.insert(Rational(a, b));
  std::vector<Rational> samples{*crit.begin() / 2, *crit.rbegin() + 1};
  for (auto it = crit.begin(); std::next(it) != crit.end(); ++it) samples.push_back((*it + *std::next(it)) / 2);

  std::set<std::vector<ExpVec>> seen;
  std::vector<MonomialSet> out;
  for (const Rational& w : samples) {
    std::vector<ExpVec> pts;
    for (std::uint32_t i = 0; i < q; ++i)
      for (std::uint32_t j = 0; j < q; ++j) pts.push_back({i, j});
    auto value = [&](const ExpVec& v) { return w * static_cast<std::int64_t>(v[0]) + static_cast<std::int64_t>(v[1]); };
    std::sort(pts.begin(), pts.end(), [&](const ExpVec& x, const ExpVec& y) { return value(x) < value(y); });
    for (std::size_t len = 1; len <= pts.size(); ++len) {
      std::vector<ExpVec> prefix(pts.begin(), pts.begin() + len);
      // confirm it really is the weighted RM set with threshold value(last)
      MonomialSet a(q, 2, prefix);
      if (seen.insert(a.exponents()).second) {
        if (weighted_rm_set(q, 2, value(pts[len - 1]), {w, 1}) != a) return {};
        out.push_back(std::move(a));
      }
    }
  }
  return out;
}

Outcome c7() {
  Outcome o;
  std::ostringstream note;
  for (std::uint32_t q : {5u, 7u}) {
    const auto sets = all_wrm_sets(q);
    o.expect(!sets.empty(), "sweep produced a non-WRM prefix");
    std::vector<std::uint64_t> sq_fb;
    for (const auto& a : sets) sq_fb.push_back(footprint_bound(square_support(a)).value);
    for (std::uint64_t d = 1; d < q; ++d) {
      std::size_t best = 0;
      for (std::size_t i = 0; i < sets.size(); ++i)
        if (sq_fb[i] >= d) best = std::max(best, sets[i].size());
      const auto design = best_wrm_square_design(q, d);
      const bool is_wrm = std::any_of(sets.begin(), sets.end(), [&](const MonomialSet& s) { return s == design; });
      o.expect(is_wrm, "design for q=" + std::to_string(q) + " d=" + std::to_string(d) + " is not a WRM set");
      o.expect(footprint_bound(square_support(design)).value >= d, "design misses d");
      o.expect(design.size() == best, "q=" + std::to_string(q) + " d=" + std::to_string(d) + ": design k=" +
                                          std::to_string(design.size()) + ", sweep max " + std::to_string(best));
    }
    note << (q == 5 ? "" : ", ") << sets.size() << " WRM sets at q=" << q;
  }
  if (o.ok) o.detail = note.str();
  return o;
}

Outcome c8() {
  Outcome o;
  int checked = 0;
  for (std::uint32_t q : {7u, 11u, 13u, 17u, 19u, 23u})
    for (std::uint64_t d = 1; d < q; ++d) {
      const std::uint64_t gap = 2ull * q - d;
      const bool below = gap * gap > 2ull * q * q;
      o.expect(wrm_beats_halfhyp(q, d) == below, "threshold test disagrees at q=" + std::to_string(q));
      if (!below) continue;
      ++checked;
      const auto wrm = best_wrm_square_design(q, d).size();
      const auto half = half_hyperbolic_set(q, 2, d).size();
      o.expect(wrm > half, "q=" + std::to_string(q) + " d=" + std::to_string(d) + ": " + std::to_string(wrm) +
                               " <= " + std::to_string(half));
    }
  if (o.ok) o.detail = std::to_string(checked) + " (q, d) pairs";
  return o;
}

Outcome c9() {
  Outcome o;
  std::uint64_t cases = 0;
  for (std::uint32_t q : testing::prime_powers_up_to(25)) {
    const Field f(q);
    for (std::uint64_t j = 0; j + 2 <= q; ++j) {
      // alpha^j by repeated multiplication
      Elem target = 1;
      for (std::uint64_t t = 0; t < j; ++t) target = f.mul(target, f.primitive());
      for (std::uint64_t l = 1; l <= q - 1; ++l) {
        std::uint64_t roots = 0;
        for (std::uint32_t x = 0; x < q; ++x) {
          Elem v = 1;
          for (std::uint64_t t = 0; t < l; ++t) v = f.mul(v, static_cast<Elem>(x));
          roots += v == target;
        }
        ++cases;
        o.expect(root_count_binomial(l, j, f) == roots, "q=" + std::to_string(q) + " l=" + std::to_string(l) +
                                                             " j=" + std::to_string(j));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " (q, l, j) cases";
  return o;
}

Outcome c10() {
  Outcome o;
  testing::Rng rng(10);
  auto rat = [&](std::int64_t hi, std::int64_t den) {
    return Rational(static_cast<std::int64_t>(testing::uniform(rng, 1, hi * den)), den);
  };
  int verified = 0;
  for (int t = 0; t < 100; ++t) {
    const std::uint32_t q = std::vector<std::uint32_t>{5, 7, 11}[t % 3];
    const std::uint64_t d = testing::uniform(rng, 1, q - 1);
    RationalHalfspace h{{rat(3, 4), rat(3, 4)}, rat(static_cast<std::int64_t>(q), 3)};
    ConvexRegion c = halfspace_region(h);
    if (t % 4 == 0) c.halfspaces.push_back({{rat(2, 3), -rat(1, 2)}, rat(static_cast<std::int64_t>(q) / 2, 2)});
    const auto b = hyperbolic_set(q, 2, d);
    if (algorithm1_verify(c, b)) {
      ++verified;
      o.expect(check_square_designed(region_lattice_points(c, q), b), "counterexample at t=" + std::to_string(t));
    }
  }
  o.expect(verified >= 10, "only " + std::to_string(verified) + " regions passed the region check");
  if (o.ok) o.detail = std::to_string(verified) + "/100 regions verified, all squares contained";
  return o;
}

}  // namespace

int main() {
  criterion(1, "RM/Hyp/WRM parameter table exact via FB and box witness", 1, c1);
  criterion(2, "HalfHyp_11(12) = [121,24,56]; HalfHyp_11(6) d=49, k=31", 1, c2);
  criterion(3, "square designs inside Hyp_11(6), square FB >= 6", 1, c3);
  criterion(4, "Schur square equals C_{(A+A)_q} on 200 random sets", 120, c4);
  criterion(5, "exhaustive distance = FB = box witness weight on lower sets", 300, c5);
  criterion(6, "rm_min_distance matches exhaustive search, q in {3,4,5}", 120, c6);
  criterion(7, "best WRM square design is optimal among all WRM sets, q in {5,7}", 180, c7);
  criterion(8, "WRM beats HalfHyp below (2 - sqrt 2) q", 60, c8);
  criterion(9, "root_count_binomial matches brute force, q <= 25", 60, c9);
  criterion(10, "region check soundness on 100 random halfspace regions", 120, c10);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
