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

#include <doctest.h>

#include "gsuzuki/json_io.hpp"

using namespace gs;

TEST_CASE("polynomial serialization keeps full precision") {
  // Coefficients far beyond any double or int64: the (3,2) L-polynomial.
  IntPoly l = l_polynomial(CurveParams(3, 2));
  Json j = poly_to_json(l);
  // Serialized through text and parsed back, nothing may change.
  IntPoly back = poly_from_json(Json::parse(j.dump()));
  CHECK(back == l);
  CHECK(j[l.degree()].get<std::string>() == int_pow(Int(27), 117).get_str());
}

TEST_CASE("field and element descriptors") {
  Field f = Field::get(3, 2);
  Json j = field_to_json(f);
  CHECK(j["p"] == 3);
  CHECK(j["d"] == 2);
  CHECK(j["modulus"] == Json::array({1, 0, 1}));
  CHECK(element_to_json(f.from_index(5)) == Json::array({2, 1}));
}

TEST_CASE("cyclotomic element serialization uses fraction strings") {
  CycloElement e(5, {Rat(1, 2), Rat(-3), Rat(0), Rat(2, 7)});
  Json j = cyclo_to_json(e);
  CHECK(j["p"] == 5);
  CHECK(j["coords"] == Json::array({"1/2", "-3", "0", "2/7"}));
}

TEST_CASE("p-polynomial round-trip") {
  PPolynomial r = subcover_p_polynomial(CurveParams(3, 2));
  Json j = p_polynomial_to_json(r);
  PPolynomial back = p_polynomial_from_json(Json::parse(j.dump()));
  CHECK(back.base() == r.base());
  REQUIRE(back.coeffs().size() == r.coeffs().size());
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) {
    CHECK(back.coeffs()[i] == r.coeffs()[i]);
  }
}

TEST_CASE("count report serialization") {
  Json j = count_report_to_json(point_count(CurveParams(3, 1), 6));
  CHECK(j.dump() == R"({"n":6,"N":"892","method":"formula","maximality":"Maximal"})");
}
