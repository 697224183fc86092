// Copyright 2026 the gsuzuki authors
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

#include <json.hpp>

#include "gsuzuki/covers.hpp"
#include "gsuzuki/cyclotomic.hpp"
#include "gsuzuki/suzuki.hpp"

namespace gs {

// Big integers always serialize as decimal strings so that no JSON consumer
// can silently round them; key order is fixed for byte-stable output.
using Json = nlohmann::ordered_json;

std::string to_decimal(const Int& v);
Int int_from_decimal(const std::string& s);

Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

Json field_to_json(const Field& f);
Json element_to_json(const Element& e);

Json cyclo_to_json(const CycloElement& e);

Json p_polynomial_to_json(const PPolynomial& r);
PPolynomial p_polynomial_from_json(const Json& j);

Json count_report_to_json(const CountReport& rep);
Json cover_report_to_json(const CoverReport& rep);

}  // namespace gs
