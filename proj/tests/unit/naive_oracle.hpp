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

// Test-only reference counters.  These deliberately avoid the production
// counting machinery (no Frobenius matrices, no incremental forms): powers
// are square-and-multiply, traces are explicit power sums, and every field
// element is visited one by one.

#pragma once

#include "gsuzuki/finite_field.hpp"

namespace gs::testing {

// e^(p^k) by repeated exponentiation.
inline Element naive_power_pk(const Element& e, int k) {
  Element r = e;
  for (int i = 0; i < k; ++i) r = r.pow(Int(e.field().p()));
  return r;
}

// Relative trace to GF(p^r) as an explicit power sum.
inline Element naive_trace(const Element& e, int r) {
  const int d = e.field().degree();
  Element acc = e.field().zero();
  for (int i = 0; i * r < d; ++i) acc = acc + naive_power_pk(e, i * r);
  return acc;
}

// Rational points of y^q - y = x^(q0)(x^q - x) over GF(p, m n), counting
// the fiber over each x (q when the relative trace of the right side
// vanishes) plus the point at infinity.
inline Int naive_curve_count(long p, int t, int n) {
  const int m = 2 * t - 1;
  Field f = Field::get(p, m * n);
  Int q = int_pow(Int(p), static_cast<unsigned long>(m));
  Int count = 1;
  for (Int i = 0; i < f.order(); ++i) {
    Element x = f.from_index(i);
    Element rhs = naive_power_pk(x, t) * (naive_power_pk(x, m) - x);
    if (naive_trace(rhs, m).is_zero()) count += q;
  }
  return count;
}

// Affine solutions of y^p - y = x R(x) over GF(p, m n) with R given by
// base-field coefficients; the fiber over each x has size p or 0.
inline Int naive_form_count(const Field& base, const std::vector<Element>& r_coeffs, int n) {
  const long p = base.p();
  const int m = base.degree();
  Field ext = Field::get(p, m * n);
  Embedding emb(base, ext);
  Int count = 0;
  for (Int i = 0; i < ext.order(); ++i) {
    Element x = ext.from_index(i);
    Element rx = ext.zero();
    for (std::size_t k = 0; k < r_coeffs.size(); ++k) {
      if (r_coeffs[k].is_zero()) continue;
      rx = rx + emb(r_coeffs[k]) * naive_power_pk(x, static_cast<int>(k));
    }
    if (naive_trace(x * rx, 1).is_zero()) count += p;
  }
  return count;
}

}  // namespace gs::testing
