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

#include <doctest.h>

#include "sqc/bounds.hpp"
#include "sqc/certify.hpp"
#include "sqc/error.hpp"
#include "sqc/evalcode.hpp"
#include "sqc/families.hpp"
#include "support.hpp"

using namespace sqc;

namespace {

std::uint64_t brute_roots(const Field& f, std::uint64_t l, std::uint64_t j) {
  const Elem target = f.pow(f.primitive(), j);
  std::uint64_t count = 0;
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    Elem v = 1;
    for (std::uint64_t t = 0; t < l; ++t) v = f.mul(v, static_cast<Elem>(x));
    count += v == target;
  }
  return count;
}

std::uint64_t punctured_distance(const MonomialSet& b, const std::vector<std::size_t>& axes) {
  return min_distance_exhaustive(puncture_axes(generator_matrix(b), axes));
}

}  // namespace

TEST_CASE("root_count_binomial") {
  const Field f7(7);
  for (std::uint64_t j = 0; j <= 5; ++j) CHECK(root_count_binomial(1, j, f7) == 1);
  CHECK(root_count_binomial(3, 0, f7) == 3);
  CHECK(root_count_binomial(2, 1, f7) == 0);
  for (std::uint32_t q : testing::prime_powers_up_to(25)) {
    const Field f(q);
    for (std::uint64_t l = 1; l <= q - 1; ++l)
      for (std::uint64_t j = 0; j + 2 <= q; ++j) REQUIRE(root_count_binomial(l, j, f) == brute_roots(f, l, j));
  }
}

TEST_CASE("box certificates") {
  const auto rm = box_certificate(reed_muller_set(11, 2, 6));
  REQUIRE(rm);
  CHECK(rm->kind == CertificateKind::box);
  CHECK(rm->alpha == ExpVec{0, 6});
  CHECK(rm->claimed_weight == 55);
  CHECK(weight_of_witness(*rm, reed_muller_set(11, 2, 6)) == 55);

  const auto one = box_certificate(MonomialSet(5, 2, {ExpVec{0, 0}}));
  REQUIRE(one);
  CHECK(one->factors.empty());
  CHECK(one->claimed_weight == 25);

  const auto half = box_certificate(half_hyperbolic_set(11, 2, 6));
  REQUIRE(half);
  CHECK(half->alpha == ExpVec{4, 4});
  CHECK(half->claimed_weight == 49);

  CHECK_FALSE(box_certificate(MonomialSet(5, 2, {ExpVec{0, 0}, ExpVec{0, 3}})).has_value());
}

TEST_CASE("divisor certificates") {
  const MonomialSet a(7, 2, {ExpVec{0, 0}, ExpVec{3, 0}});
  const auto c = divisor_certificate(a);
  REQUIRE(c);
  CHECK(c->claimed_weight == 28);
  REQUIRE(c->factors.size() == 1);
  CHECK(c->factors[0].binomials == std::vector<Binomial>{{3, 0, 1}});
  CHECK(weight_of_witness(*c, a) == 28);

  const MonomialSet b(7, 2, {ExpVec{0, 0}, ExpVec{2, 0}, ExpVec{4, 0}});
  const auto cb = divisor_certificate(b);
  REQUIRE(cb);
  CHECK(cb->claimed_weight == 21);
  // (X^2 - 1)(X^2 - alpha^2) with alpha = 3
  CHECK(cb->factors[0].binomials == std::vector<Binomial>{{2, 0, 1}, {2, 0, 2}});

  // X^l - X with l - 1 | q - 1
  const MonomialSet lx(7, 2, {ExpVec{1, 0}, ExpVec{4, 0}});
  const auto cl = divisor_certificate(lx);
  REQUIRE(cl);
  CHECK(cl->claimed_weight == 21);

  // both axes
  const MonomialSet two(7, 2, {ExpVec{0, 0}, ExpVec{2, 0}, ExpVec{0, 3}, ExpVec{2, 3}});
  const auto ct = divisor_certificate(two);
  REQUIRE(ct);
  CHECK(ct->claimed_weight == 20);
  CHECK(min_distance_exhaustive(generator_matrix(two)) == 20);

  CHECK_FALSE(divisor_certificate(MonomialSet(7, 2, {ExpVec{0, 0}, ExpVec{5, 0}})).has_value());
}

TEST_CASE("divisor certificates are exact") {
  testing::Rng rng(31);
  int hits = 0;
  for (int t = 0; t < 400; ++t) {
    const std::uint32_t q = std::vector<std::uint32_t>{4, 5, 7, 9}[testing::uniform(rng, 0, 3)];
    const auto a = testing::random_set(q, 2, testing::uniform(rng, 1, 4), rng);
    if (auto c = divisor_certificate(a)) {
      ++hits;
      REQUIRE(c->claimed_weight == footprint_bound(a).value);
      REQUIRE(min_distance_exhaustive(generator_matrix(a)) == c->claimed_weight);
    }
  }
  CHECK(hits >= 5);
}

TEST_CASE("broken witnesses are rejected") {
  DistanceCertificate c;
  c.kind = CertificateKind::box;
  c.q = 5;
  c.alpha = ExpVec{0, 1};
  c.shift = ExpVec(2);
  c.factors.push_back({1, {0}, {}});
  try {
    weight_of_witness(c, MonomialSet(5, 2, {ExpVec{0, 0}}));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SupportOutsideA);
  }
  CHECK(weight_of_witness(c, MonomialSet(5, 2, {ExpVec{0, 1}})) == 20);
}

TEST_CASE("shift_reduce") {
  const auto r = shift_reduce(MonomialSet(5, 2, {ExpVec{1, 0}, ExpVec{2, 1}}), 0);
  REQUIRE(r);
  CHECK(r->shift == 1);
  CHECK(r->reduced == MonomialSet(5, 2, {ExpVec{0, 0}, ExpVec{1, 1}}));
  CHECK_FALSE(shift_reduce(MonomialSet(5, 2, {ExpVec{0, 2}, ExpVec{3, 1}}), 0).has_value());

  // X_1 X_2^3 vanishes exactly on the axes
  const MonomialSet single(5, 2, {ExpVec{1, 3}});
  const auto cd = certified_min_distance(single);
  CHECK(cd.exact);
  CHECK(cd.d == 16);
  CHECK(cd.certificate.kind == CertificateKind::shifted);
  CHECK(min_distance_exhaustive(generator_matrix(single)) == 16);
  // the plain shifted set has a larger distance
  CHECK(min_distance_exhaustive(generator_matrix(MonomialSet(5, 2, {ExpVec{0, 0}}))) == 25);
}

TEST_CASE("shifting preserves the distance on the punctured grid") {
  testing::Rng rng(41);
  for (int t = 0; t < 150; ++t) {
    const std::uint32_t q = std::vector<std::uint32_t>{3, 4, 5}[testing::uniform(rng, 0, 2)];
    auto a = testing::random_set(q, 2, testing::uniform(rng, 1, 5), rng);
    const std::size_t axis = testing::uniform(rng, 0, 1);
    const auto r = shift_reduce(a, axis);
    if (!r) continue;
    const std::uint64_t da = min_distance_exhaustive(generator_matrix(a));
    REQUIRE(punctured_distance(r->reduced, {axis}) == da);
    REQUIRE(min_distance_exhaustive(generator_matrix(r->reduced)) >= da);
  }
}

TEST_CASE("certified distance equals exhaustive distance on lower sets") {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    for (const auto& a : testing::all_lower_sets_2d(q, q - 1)) {
      const auto cd = certified_min_distance(a);
      REQUIRE(cd.exact);
      REQUIRE(cd.certificate.kind == CertificateKind::box);
      REQUIRE(cd.d == footprint_bound(a).value);
      REQUIRE(weight_of_witness(cd.certificate, a) == cd.d);
      REQUIRE(min_distance_exhaustive(generator_matrix(a)) == cd.d);
    }
  }
}

TEST_CASE("certificates across families") {
  for (std::uint32_t q : {3u, 5u, 7u, 11u}) {
    std::vector<MonomialSet> sets;
    for (std::uint64_t d = 1; d < q * q; d += 5) {
      sets.push_back(hyperbolic_set(q, 2, d));
      sets.push_back(half_hyperbolic_set(q, 2, d));
    }
    for (std::uint64_t s = 0; s <= 2 * (q - 1); ++s) {
      sets.push_back(reed_muller_set(q, 2, s));
      sets.push_back(weighted_rm_set(q, 2, Rational(static_cast<std::int64_t>(s)), {Rational(3, 2), 1}));
    }
    sets.push_back(hyperbolic_set(q, 3, q));
    for (const auto& a : sets) {
      if (a.empty()) continue;
      const auto cd = certified_min_distance(a);
      REQUIRE(cd.exact);
      REQUIRE(cd.d == footprint_bound(a).value);
      REQUIRE(weight_of_witness(cd.certificate, a) == cd.d);
    }
  }
  const auto wrm = certified_min_distance(weighted_rm_set(11, 2, 15, {5, 3}));
  CHECK(wrm.exact);
  CHECK(wrm.d == 66);
}

TEST_CASE("certified distance is a lower bound or exact on arbitrary sets") {
  testing::Rng rng(43);
  for (int t = 0; t < 300; ++t) {
    const std::uint32_t q = std::vector<std::uint32_t>{3, 4, 5}[testing::uniform(rng, 0, 2)];
    const auto a = testing::random_set(q, 2, testing::uniform(rng, 1, 6), rng);
    const auto cd = certified_min_distance(a);
    const std::uint64_t d = min_distance_exhaustive(generator_matrix(a));
    if (cd.exact) {
      REQUIRE(cd.d == d);
      REQUIRE(weight_of_witness(cd.certificate, a) == d);
    } else {
      REQUIRE(cd.d <= d);
    }
    REQUIRE(footprint_bound(a).value <= cd.d);
  }
}
