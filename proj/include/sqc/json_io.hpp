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

#include <string>

#include <json.hpp>

#include "sqc/bounds.hpp"
#include "sqc/expsets.hpp"
#include "sqc/families.hpp"
#include "sqc/witness.hpp"

namespace sqc {

using Json = nlohmann::ordered_json;

/// {"q": int, "m": int, "exponents": [[int, ...], ...]}
Json to_json(const MonomialSet& a);
MonomialSet monomial_set_from_json(const Json& j);

/// {"halfspaces": [{"w": ["p/q", ...], "b": "p/q"}], "box": {"lo", "hi"} | null, "product": {"d": int} | null}
Json to_json(const ConvexRegion& c);
ConvexRegion region_from_json(const Json& j);

/// {"kind", "alpha", "shift", "factors": [{"axis", "roots_or_binomials"}], "weight"}
Json to_json(const DistanceCertificate& cert);

Json to_json(const ParamsReport& r);

/// family,q,m,d_design,n,k,fb,d_exact,d_source,square_fb
std::string params_csv_header();
std::string params_csv_row(const std::string& family, const std::string& d_design, const ParamsReport& r);

/// Parses the whole string as JSON; ParseError on failure.
Json parse_json(const std::string& text);

}  // namespace sqc
