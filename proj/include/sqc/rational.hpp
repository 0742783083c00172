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
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74 defines int == rational as rational == int, which C++20 rewrites
// back into the same call. Exact-match overloads win over both templates.
namespace boost {
inline constexpr bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline constexpr bool operator==(const rational<std::int64_t>& a, int b) {
  return a == static_cast<std::int64_t>(b);
}
}  // namespace boost

namespace sqc {

using Rational = boost::rational<std::int64_t>;

/// Parses "p/q" or a plain decimal integer. Floats are rejected.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Largest integer <= n/d for any nonzero d.
std::int64_t floor_div(std::int64_t n, std::int64_t d);

inline std::int64_t floor(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }

}  // namespace sqc
