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

#include "sqc/json_io.hpp"

#include <charconv>
#include <limits>
#include <sstream>

#include "sqc/error.hpp"
#include "sqc/rational.hpp"

namespace sqc {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InversionOfZero: return "InversionOfZero";
    case ErrorKind::MismatchedFields: return "MismatchedFields";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::MismatchedAmbient: return "MismatchedAmbient";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::ParityError: return "ParityError";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SupportOutsideA: return "SupportOutsideA";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  require(ec == std::errc() && ptr == last && first != last, ErrorKind::ParseError,
          "'" + std::string(whole) + "' is not an integer or p/q rational");
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  require(den != 0, ErrorKind::ParseError, "'" + std::string(text) + "' has a zero denominator");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  require(d != 0, ErrorKind::RangeError, "division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

Json to_json(const MonomialSet& a) {
  Json exps = Json::array();
  for (const auto& v : a) exps.push_back(std::vector<std::uint32_t>(v.begin(), v.end()));
  return Json{{"q", a.q()}, {"m", a.m()}, {"exponents", std::move(exps)}};
}

namespace {

template <class T>
T get_field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorKind::ParseError, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("key '") + key + "': " + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  require(j.is_string(), ErrorKind::ParseError, "rationals must be integers or \"p/q\" strings");
  return parse_rational(j.get<std::string>());
}

}  // namespace

MonomialSet monomial_set_from_json(const Json& j) {
  const auto q = get_field<std::int64_t>(j, "q");
  const auto m = get_field<std::int64_t>(j, "m");
  require(q >= 2 && q <= 65536, ErrorKind::InvalidField, "q = " + std::to_string(q) + " out of range");
  require(m >= 1 && m <= static_cast<std::int64_t>(kMaxVariables), ErrorKind::InvalidArgument,
          "m = " + std::to_string(m) + " out of range");
  const auto rows = get_field<std::vector<std::vector<std::int64_t>>>(j, "exponents");
  std::vector<ExpVec> exps;
  exps.reserve(rows.size());
  for (const auto& row : rows) {
    require(row.size() == static_cast<std::size_t>(m), ErrorKind::ParseError,
            "exponent of length " + std::to_string(row.size()) + " for m = " + std::to_string(m));
    ExpVec v(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      require(row[i] >= 0 && row[i] <= std::numeric_limits<std::uint32_t>::max(), ErrorKind::ParseError,
              "exponents must be non-negative integers");
      v[i] = static_cast<std::uint32_t>(row[i]);
    }
    exps.push_back(v);
  }
  return MonomialSet(static_cast<std::uint32_t>(q), static_cast<std::size_t>(m), std::move(exps));
}

Json to_json(const ConvexRegion& c) {
  Json hs = Json::array();
  for (const auto& h : c.halfspaces) {
    Json w = Json::array();
    for (const auto& x : h.w) w.push_back(to_string(x));
    hs.push_back(Json{{"w", std::move(w)}, {"b", to_string(h.b)}});
  }
  Json out{{"halfspaces", std::move(hs)}};
  out["box"] = c.box ? Json{{"lo", to_string(c.box->lo)}, {"hi", to_string(c.box->hi)}} : Json(nullptr);
  out["product"] = c.product_d ? Json{{"d", *c.product_d}} : Json(nullptr);
  if (c.halfspaces.empty()) out["m"] = c.m;
  return out;
}

ConvexRegion region_from_json(const Json& j) {
  require(j.is_object(), ErrorKind::ParseError, "region must be a JSON object");
  ConvexRegion c;
  std::optional<std::size_t> m;
  if (j.contains("m") && !j["m"].is_null()) m = get_field<std::size_t>(j, "m");
  if (j.contains("halfspaces")) {
    require(j["halfspaces"].is_array(), ErrorKind::ParseError, "'halfspaces' must be an array");
    for (const auto& h : j["halfspaces"]) {
      require(h.is_object() && h.contains("w") && h["w"].is_array() && h.contains("b"), ErrorKind::ParseError,
              "halfspace needs 'w' (array) and 'b'");
      RationalHalfspace hs;
      for (const auto& x : h["w"]) hs.w.push_back(rational_from_json(x));
      hs.b = rational_from_json(h["b"]);
      require(std::any_of(hs.w.begin(), hs.w.end(), [](const Rational& x) { return x != 0; }),
              ErrorKind::InvalidArgument, "halfspace normal is zero");
      require(!m || *m == hs.w.size(), ErrorKind::DimensionMismatch, "halfspaces of different dimension");
      m = hs.w.size();
      c.halfspaces.push_back(std::move(hs));
    }
  }
  if (j.contains("box") && !j["box"].is_null()) {
    const auto& b = j["box"];
    require(b.is_object() && b.contains("lo") && b.contains("hi"), ErrorKind::ParseError, "box needs 'lo' and 'hi'");
    c.box = RationalBox{rational_from_json(b["lo"]), rational_from_json(b["hi"])};
  }
  if (j.contains("product") && !j["product"].is_null()) {
    const auto d = get_field<std::int64_t>(j["product"], "d");
    require(d >= 1, ErrorKind::RangeError, "product d must be at least 1");
    c.product_d = static_cast<std::uint64_t>(d);
  }
  require(m.has_value(), ErrorKind::ParseError, "region dimension unknown: give halfspaces or 'm'");
  c.m = *m;
  return c;
}

Json to_json(const DistanceCertificate& cert) {
  Json factors = Json::array();
  for (const auto& f : cert.factors) {
    Json rb;
    if (!f.roots.empty()) rb["roots"] = f.roots;
    if (!f.binomials.empty()) {
      Json bins = Json::array();
      for (const auto& b : f.binomials) bins.push_back(Json{{"hi", b.hi}, {"lo", b.lo}, {"c", b.c}});
      rb["binomials"] = std::move(bins);
    }
    factors.push_back(Json{{"axis", f.axis}, {"roots_or_binomials", std::move(rb)}});
  }
  return Json{{"kind", to_string(cert.kind)},
              {"alpha", std::vector<std::uint32_t>(cert.alpha.begin(), cert.alpha.end())},
              {"shift", std::vector<std::uint32_t>(cert.shift.begin(), cert.shift.end())},
              {"factors", std::move(factors)},
              {"weight", cert.claimed_weight}};
}

Json to_json(const ParamsReport& r) {
  Json out{{"q", r.q}, {"m", r.m}, {"n", r.n}, {"k", r.k}, {"fb", r.fb},
           {"fb_argmin", std::vector<std::uint32_t>(r.argmin.begin(), r.argmin.end())}};
  out["d_exact"] = r.d_exact ? Json(*r.d_exact) : Json(nullptr);
  out["d_source"] = to_string(r.d_source);
  out["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  out["square"] = r.square ? to_json(*r.square) : Json(nullptr);
  return out;
}

std::string params_csv_header() { return "family,q,m,d_design,n,k,fb,d_exact,d_source,square_fb"; }

std::string params_csv_row(const std::string& family, const std::string& d_design, const ParamsReport& r) {
  std::ostringstream s;
  s << family << ',' << r.q << ',' << r.m << ',' << d_design << ',' << r.n << ',' << r.k << ',' << r.fb << ',';
  if (r.d_exact) s << *r.d_exact;
  s << ',' << to_string(r.d_source) << ',';
  if (r.square) s << r.square->fb;
  return s.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

}  // namespace sqc
