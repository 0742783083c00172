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

#include "sqc/certify.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sqc/bounds.hpp"
#include "sqc/error.hpp"
#include "sqc/evalcode.hpp"

namespace sqc {

namespace {

void require_usable(const MonomialSet& a, const char* what) {
  require(a.reduced(), ErrorKind::NotReduced, std::string(what) + " needs a reduced set");
  require(!a.empty(), ErrorKind::EmptySet, std::string(what) + " needs a nonempty set");
}

// Visits every vector v with 0 <= v_i <= hi_i.
template <class Fn>
bool all_in_box(const ExpVec& hi, Fn&& fn) {
  ExpVec v(hi.size());
  while (true) {
    if (!fn(v)) return false;
    std::size_t i = hi.size();
    while (true) {
      if (i == 0) return true;
      --i;
      if (v[i] < hi[i]) {
        ++v[i];
        break;
      }
      v[i] = 0;
    }
  }
}

std::uint64_t grid_value(const ExpVec& b, const ExpVec& shift, std::uint32_t q) {
  std::uint64_t prod = 1;
  for (std::size_t j = 0; j < b.size(); ++j) prod *= (shift[j] > 0 ? q - 1 : q) - b[j];
  return prod;
}

// Box witness X^shift prod_j prod_{t < alpha_j} (X_j - r_t) where r runs over
// the nonzero elements on shifted axes and over all elements elsewhere.
std::optional<DistanceCertificate> grid_box_certificate(const MonomialSet& a, const MonomialSet& b,
                                                        const ExpVec& shift, const Limits& limits) {
  const std::uint32_t q = b.q();
  std::uint64_t best = UINT64_MAX;
  for (const auto& v : b) best = std::min(best, grid_value(v, shift, q));
  const bool shifted = std::any_of(shift.begin(), shift.end(), [](auto s) { return s > 0; });
  for (const auto& alpha : b) {
    if (grid_value(alpha, shift, q) != best) continue;
    if (!all_in_box(alpha, [&](const ExpVec& v) { return b.contains(v); })) continue;
    DistanceCertificate cert;
    cert.kind = shifted ? CertificateKind::shifted : CertificateKind::box;
    cert.q = q;
    cert.alpha = alpha + shift;
    cert.shift = shift;
    for (std::size_t j = 0; j < b.m(); ++j) {
      if (alpha[j] == 0) continue;
      AxisFactor f;
      f.axis = j;
      const Elem first = shift[j] > 0 ? 1 : 0;
      for (std::uint32_t t = 0; t < alpha[j]; ++t) f.roots.push_back(static_cast<Elem>(first + t));
      cert.factors.push_back(std::move(f));
    }
    cert.claimed_weight = best;
    const std::uint64_t w = weight_of_witness(cert, a, limits);
    require(w == best, ErrorKind::InternalError,
            "box witness at " + alpha.to_string() + " has weight " + std::to_string(w) + ", expected " +
                std::to_string(best));
    return cert;
  }
  return std::nullopt;
}

struct AxisOption {
  std::vector<std::uint32_t> support;
  std::vector<Binomial> binomials;
  std::uint32_t roots = 0;
};

std::vector<AxisOption> axis_options(const Field& field) {
  const std::uint32_t q = field.q();
  const Elem alpha = field.primitive();
  std::vector<AxisOption> out;
  out.push_back({{0}, {}, 0});
  for (std::uint32_t l = 1; l <= q - 1; ++l) {
    if ((q - 1) % l != 0) continue;
    for (std::uint32_t k = 1; k * l <= q - 1; ++k) {
      AxisOption o;
      for (std::uint32_t t = 0; t <= k; ++t) o.support.push_back(t * l);
      for (std::uint32_t t = 0; t < k; ++t) o.binomials.push_back({l, 0, field.pow(alpha, std::uint64_t{l} * t)});
      o.roots = k * l;
      out.push_back(std::move(o));
    }
  }
  for (std::uint32_t l = 2; l <= q - 1; ++l) {
    if ((q - 1) % (l - 1) != 0) continue;
    out.push_back({{1, l}, {{l, 1, 1}}, l});
  }
  return out;
}

}  // namespace

std::uint64_t root_count_binomial(std::uint64_t l, std::uint64_t j, const Field& field) {
  require(l >= 1, ErrorKind::RangeError, "l must be at least 1");
  require(j + 2 <= field.q(), ErrorKind::RangeError, "j must lie in [0, q-2]");
  const std::uint64_t g = std::gcd(l, std::uint64_t{field.q()} - 1);
  return j % g == 0 ? g : 0;
}

std::optional<DistanceCertificate> box_certificate(const MonomialSet& a, const Limits& limits) {
  require_usable(a, "box_certificate");
  return grid_box_certificate(a, a, ExpVec(a.m()), limits);
}

std::optional<DistanceCertificate> divisor_certificate(const MonomialSet& a, const Limits& limits) {
  require_usable(a, "divisor_certificate");
  const auto field = Field::get(a.q());
  const Footprint fb = footprint_bound(a);
  const std::uint32_t q = a.q();
  const std::size_t m = a.m();
  const auto options = axis_options(*field);

  std::vector<std::size_t> choice(m, 0);
  std::optional<DistanceCertificate> found;

  auto try_choice = [&]() {
    ExpVec hi(m);
    for (std::size_t j = 0; j < m; ++j) hi[j] = static_cast<std::uint32_t>(options[choice[j]].support.size() - 1);
    const bool inside = all_in_box(hi, [&](const ExpVec& idx) {
      ExpVec e(m);
      for (std::size_t j = 0; j < m; ++j) e[j] = options[choice[j]].support[idx[j]];
      return a.contains(e);
    });
    if (!inside) return false;
    DistanceCertificate cert;
    cert.kind = CertificateKind::divisor;
    cert.q = q;
    cert.alpha = fb.argmin;
    cert.shift = ExpVec(m);
    for (std::size_t j = 0; j < m; ++j) {
      const auto& o = options[choice[j]];
      if (o.binomials.empty()) continue;
      cert.factors.push_back({j, {}, o.binomials});
    }
    cert.claimed_weight = fb.value;
    if (weight_of_witness(cert, a, limits) != fb.value) return false;
    found = std::move(cert);
    return true;
  };

  // Depth-first over per-axis options; the partial product of (q - roots)
  // must keep dividing FB(A).
  auto dfs = [&](auto&& self, std::size_t axis, std::uint64_t prod) -> bool {
    if (axis == m) return prod == fb.value && try_choice();
    for (std::size_t o = 0; o < options.size(); ++o) {
      const std::uint64_t next = prod * (q - options[o].roots);
      if (fb.value % next != 0) continue;
      choice[axis] = o;
      if (self(self, axis + 1, next)) return true;
    }
    return false;
  };
  dfs(dfs, 0, 1);
  return found;
}

std::optional<ShiftReduction> shift_reduce(const MonomialSet& a, std::size_t axis) {
  require_usable(a, "shift_reduce");
  require(axis < a.m(), ErrorKind::InvalidArgument, "axis " + std::to_string(axis) + " outside [0, m)");
  std::uint32_t s = UINT32_MAX;
  for (const auto& v : a) s = std::min(s, v[axis]);
  if (s == 0) return std::nullopt;
  std::vector<ExpVec> out;
  out.reserve(a.size());
  for (ExpVec v : a) {
    v[axis] -= s;
    out.push_back(v);
  }
  return ShiftReduction{MonomialSet(a.q(), a.m(), std::move(out)), s};
}

std::uint64_t shifted_footprint_bound(const MonomialSet& b, const ExpVec& shift) {
  require_usable(b, "shifted_footprint_bound");
  require(shift.size() == b.m(), ErrorKind::DimensionMismatch, "shift length differs from m");
  std::uint64_t best = UINT64_MAX;
  for (const auto& v : b) best = std::min(best, grid_value(v, shift, b.q()));
  return best;
}

CertifiedDistance certified_min_distance(const MonomialSet& a, const Limits& limits) {
  require_usable(a, "certified_min_distance");
  MonomialSet b = a;
  ExpVec shift(a.m());
  for (std::size_t axis = 0; axis < a.m(); ++axis) {
    if (auto r = shift_reduce(b, axis)) {
      b = std::move(r->reduced);
      shift[axis] = r->shift;
    }
  }

  CertifiedDistance out;
  if (auto cert = grid_box_certificate(a, b, shift, limits)) {
    out.d = cert->claimed_weight;
    out.exact = true;
    out.certificate = std::move(*cert);
    return out;
  }
  if (auto cert = divisor_certificate(a, limits)) {
    out.d = cert->claimed_weight;
    out.exact = true;
    out.certificate = std::move(*cert);
    return out;
  }
  out.d = shifted_footprint_bound(b, shift);
  out.certificate.q = a.q();
  out.certificate.alpha = footprint_bound(a).argmin;
  out.certificate.shift = ExpVec(a.m());
  return out;
}

}  // namespace sqc
