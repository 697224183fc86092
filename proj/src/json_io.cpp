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

#include "gsuzuki/json_io.hpp"

namespace gs {

std::string to_decimal(const Int& v) { return v.get_str(); }

Int int_from_decimal(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw ParameterError("not a decimal integer: " + s);
  }
}

Json poly_to_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const Int& c : p.coeffs()) arr.push_back(to_decimal(c));
  return arr;
}

IntPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParameterError("polynomial JSON must be an array");
  std::vector<Int> coeffs;
  for (const auto& c : j) coeffs.push_back(int_from_decimal(c.get<std::string>()));
  return IntPoly(std::move(coeffs));
}

Json field_to_json(const Field& f) {
  Json j;
  j["p"] = f.p();
  j["d"] = f.degree();
  j["modulus"] = f.modulus();
  return j;
}

Json element_to_json(const Element& e) { return Json(e.coeffs()); }

Json cyclo_to_json(const CycloElement& e) {
  Json j;
  j["p"] = e.p();
  Json coords = Json::array();
  for (const Rat& c : e.coords()) coords.push_back(c.get_str());
  j["coords"] = coords;
  return j;
}

Json p_polynomial_to_json(const PPolynomial& r) {
  Json j;
  j["field"] = field_to_json(r.base());
  Json coeffs = Json::array();
  for (const Element& c : r.coeffs()) coeffs.push_back(element_to_json(c));
  j["coeffs"] = coeffs;
  return j;
}

PPolynomial p_polynomial_from_json(const Json& j) {
  Field f = Field::get(j.at("field").at("p").get<long>(), j.at("field").at("d").get<int>());
  if (j.at("field").at("modulus").get<std::vector<long>>() != f.modulus())
    throw ParameterError("p_polynomial_from_json: non-canonical field modulus");
  std::vector<Element> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(f.element(c.get<std::vector<long>>()));
  return PPolynomial(f, std::move(coeffs));
}

Json count_report_to_json(const CountReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["N"] = to_decimal(rep.N);
  j["method"] = to_string(rep.method);
  j["maximality"] = to_string(rep.maximality);
  return j;
}

Json cover_report_to_json(const CoverReport& rep) {
  Json j;
  j["p"] = rep.p;
  j["t"] = rep.t;
  j["n"] = rep.n;
  j["degree"] = to_decimal(rep.degree);
  j["genus"] = to_decimal(rep.genus);
  j["point_bound"] = to_decimal(rep.point_bound);
  return j;
}

}  // namespace gs
