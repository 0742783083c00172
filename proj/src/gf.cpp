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

#include "sqc/gf.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "sqc/error.hpp"

namespace sqc {

namespace {

using Poly = std::vector<std::uint32_t>;  // c_0..c_deg over F_p

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g over F_p.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint32_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t k = 0; k <= dg; ++k) f[shift + k] = (f[shift + k] + (p - lead) * g[k]) % p;
    trim(f);
  }
  return f;
}

// Monic polynomial of degree deg whose lower coefficients are the base-p
// digits of rank.
Poly monic_from_rank(std::uint64_t rank, std::uint32_t deg, std::uint32_t p) {
  Poly f(deg + 1, 0);
  for (std::uint32_t k = 0; k < deg; ++k) {
    f[k] = static_cast<std::uint32_t>(rank % p);
    rank /= p;
  }
  f[deg] = 1;
  return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  if (f[0] == 0) return false;
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t k = 0; k < d; ++k) count *= p;
    for (std::uint64_t r = 0; r < count; ++r) {
      if (poly_mod(f, monic_from_rank(r, d, p), p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t e) {
  std::uint64_t count = 1;
  for (std::uint32_t k = 0; k < e; ++k) count *= p;
  for (std::uint64_t r = 0; r < count; ++r) {
    Poly f = monic_from_rank(r, e, p);
    if (is_irreducible(f, p)) return f;
  }
  fail(ErrorKind::InternalError, "no irreducible polynomial found");
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) noexcept {
  if (q < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {static_cast<std::uint32_t>(q), 1};
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), e};
}

bool is_valid_field_size(std::uint64_t q) noexcept {
  return q >= 2 && q <= (1u << 16) && prime_power(q).first != 0;
}

Field::Field(std::uint32_t q) : q_(q) {
  require(is_valid_field_size(q), ErrorKind::InvalidField,
          "q = " + std::to_string(q) + " is not a prime power in [2, 65536]");
  auto [p, e] = prime_power(q);
  p_ = p;
  e_ = e;
  if (e_ == 1) {
    kind_ = FieldKind::prime;
  } else {
    kind_ = p_ == 2 ? FieldKind::binary : FieldKind::extension;
    modulus_ = smallest_irreducible(p_, e_);
  }

  // Primitive element: smallest index whose order is q - 1.
  const std::uint64_t group = q_ - 1;
  const auto factors = prime_factors(group);
  auto slow_pow = [&](Elem a, std::uint64_t n) {
    Elem result = 1;
    Elem base = a;
    while (n) {
      if (n & 1) result = e_ == 1 ? static_cast<Elem>((std::uint64_t{result} * base) % p_) : ext_mul_slow(result, base);
      base = e_ == 1 ? static_cast<Elem>((std::uint64_t{base} * base) % p_) : ext_mul_slow(base, base);
      n >>= 1;
    }
    return result;
  };
  primitive_ = 1;
  if (group > 1) {
    for (std::uint32_t a = 2; a < q_; ++a) {
      bool generator = true;
      for (auto r : factors) {
        if (slow_pow(static_cast<Elem>(a), group / r) == 1) {
          generator = false;
          break;
        }
      }
      if (generator) {
        primitive_ = static_cast<Elem>(a);
        break;
      }
    }
  }

  if (e_ > 1) {
    exp_.assign(2 * group, 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint64_t k = 0; k < group; ++k) {
      exp_[k] = x;
      exp_[k + group] = x;
      log_[x] = static_cast<std::uint32_t>(k);
      x = ext_mul_slow(x, primitive_);
    }
  }
}

std::shared_ptr<const Field> Field::get(std::uint32_t q) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::shared_ptr<const Field>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto field = std::make_shared<const Field>(q);
  cache.emplace(q, field);
  return field;
}

Elem Field::ext_mul_slow(Elem a, Elem b) const {
  Poly fa(e_), fb(e_);
  for (std::uint32_t k = 0; k < e_; ++k) {
    fa[k] = a % p_;
    a = static_cast<Elem>(a / p_);
    fb[k] = b % p_;
    b = static_cast<Elem>(b / p_);
  }
  Poly prod(2 * e_ - 1, 0);
  for (std::uint32_t i = 0; i < e_; ++i)
    for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
  Poly r = poly_mod(prod, modulus_, p_);
  std::uint32_t index = 0;
  for (std::size_t k = r.size(); k-- > 0;) index = index * p_ + r[k];
  return static_cast<Elem>(index);
}

Elem Field::add(Elem a, Elem b) const noexcept {
  switch (kind_) {
    case FieldKind::prime: {
      const std::uint32_t s = std::uint32_t{a} + b;
      return static_cast<Elem>(s >= p_ ? s - p_ : s);
    }
    case FieldKind::binary:
      return static_cast<Elem>(a ^ b);
    case FieldKind::extension:
      break;
  }
  std::uint32_t out = 0, scale = 1;
  std::uint32_t x = a, y = b;
  for (std::uint32_t k = 0; k < e_; ++k) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<Elem>(out);
}

Elem Field::neg(Elem a) const noexcept {
  switch (kind_) {
    case FieldKind::prime:
      return static_cast<Elem>(a == 0 ? 0 : p_ - a);
    case FieldKind::binary:
      return a;
    case FieldKind::extension:
      break;
  }
  std::uint32_t out = 0, scale = 1, x = a;
  for (std::uint32_t k = 0; k < e_; ++k) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return static_cast<Elem>(out);
}

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (e_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  return exp_[log_[a] + log_[b]];
}

Elem Field::inv(Elem a) const {
  require(a != 0, ErrorKind::InversionOfZero, "inverse of zero in F_" + std::to_string(q_));
  if (e_ == 1) return pow(a, p_ - 2);
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t n) const noexcept {
  Elem result = 1;
  Elem base = a;
  while (n) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::uint64_t Field::order(Elem a) const {
  require(a != 0, ErrorKind::InvalidArgument, "zero has no multiplicative order");
  std::uint64_t ord = q_ - 1;
  for (auto r : prime_factors(q_ - 1)) {
    while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
  }
  return ord;
}

Elem Field::basis(std::uint32_t k) const noexcept {
  std::uint32_t v = 1;
  for (std::uint32_t i = 0; i < k; ++i) v *= p_;
  return static_cast<Elem>(v);
}

FieldElement field_arithmetic(const Field& field, FieldElement a, FieldElement b, FieldOp op) {
  auto check = [&](const FieldElement& x) {
    require(x.q == field.q(), ErrorKind::MismatchedFields,
            "element of F_" + std::to_string(x.q) + " used in F_" + std::to_string(field.q()));
  };
  check(a);
  if (op != FieldOp::inv && op != FieldOp::pow) check(b);
  require(a.index < field.q(), ErrorKind::InvalidArgument, "element index out of range");
  switch (op) {
    case FieldOp::add:
      return {field.q(), field.add(a.index, b.index)};
    case FieldOp::mul:
      return {field.q(), field.mul(a.index, b.index)};
    case FieldOp::inv:
      return {field.q(), field.inv(a.index)};
    case FieldOp::pow:
      return {field.q(), field.pow(a.index, b.index)};
  }
  fail(ErrorKind::InternalError, "unknown field op");
}

FieldElement primitive_element(const Field& field) { return {field.q(), field.primitive()}; }

std::uint64_t checked_power(std::uint64_t q, std::size_t m, std::uint64_t cap) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (n > cap / q) fail(ErrorKind::BudgetExceeded, std::to_string(q) + "^" + std::to_string(m) + " exceeds cap " + std::to_string(cap));
    n *= q;
  }
  if (n > cap) fail(ErrorKind::BudgetExceeded, std::to_string(q) + "^" + std::to_string(m) + " exceeds cap " + std::to_string(cap));
  return n;
}

PointList::PointList(std::uint32_t q, std::size_t m, std::uint64_t n) : m_(m), n_(n), coords_(n * m) {
  for (std::size_t j = 0; j < n_; ++j) {
    std::uint64_t rest = j;
    for (std::size_t i = m_; i-- > 0;) {
      coords_[j * m_ + i] = static_cast<Elem>(rest % q);
      rest /= q;
    }
  }
}

PointList enumerate_points(const Field& field, std::size_t m, const Limits& limits) {
  require(m >= 1, ErrorKind::InvalidArgument, "dimension m must be at least 1");
  const std::uint64_t n = checked_power(field.q(), m, limits.max_points);
  return PointList(field.q(), m, n);
}

}  // namespace sqc
