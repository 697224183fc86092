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

#include <random>

#include "gsuzuki/cyclotomic.hpp"
#include "gsuzuki/finite_field.hpp"

using namespace gs;

TEST_CASE("gauss sums square to eta(-1) p") {
  // p = 3: G = zeta - zeta^2 = 1 + 2 zeta after reduction.
  CycloElement g3 = gauss_sum(3);
  CHECK(g3.coords() == std::vector<Rat>{Rat(1), Rat(2)});
  CHECK((g3 * g3).rational_value() == -3);

  CHECK((gauss_sum(5) * gauss_sum(5)).rational_value() == 5);
  CHECK((gauss_sum(7) * gauss_sum(7)).rational_value() == -7);
  CHECK_THROWS_AS(gauss_sum(2), ParameterError);
  CHECK_THROWS_AS(gauss_sum(9), ParameterError);
}

TEST_CASE("galois action") {
  const long p = 11;
  CycloElement g = gauss_sum(p);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    std::vector<Rat> coords(p - 1);
    for (Rat& c : coords) {
      c = Rat(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
      c.canonicalize();
    }
    CycloElement e(p, coords);
    CHECK(galois_apply(1, e) == e);
  }
  // sigma_i(G) = eta(i) G for every i.
  for (long i = 1; i < p; ++i) {
    CHECK(galois_apply(i, g) == g * Rat(legendre(Int(i), p)));
  }
  // sigma_{p-1} is complex conjugation: zeta * sigma_{p-1}(zeta) = 1.
  CycloElement zeta = CycloElement::zeta_power(p, 1);
  CHECK(zeta * galois_apply(p - 1, zeta) == CycloElement::from_rational(p, Rat(1)));
  CHECK_THROWS_AS(galois_apply(p, zeta), ParameterError);

  // G * sigma_{-1}(G) = p.
  for (long pp : {3L, 5L, 7L, 13L}) {
    CycloElement gp = gauss_sum(pp);
    CHECK((gp * galois_apply(pp - 1, gp)).rational_value() == pp);
  }
}

TEST_CASE("minimal polynomial of -zeta/ptilde") {
  CHECK(scaled_mp(3) == IntPoly{1, 3, 3});
  CHECK(scaled_mp(5) == IntPoly{1, 5, 15, 25, 25});
  CHECK(scaled_mp(7) == IntPoly{1, 7, 21, 49, 147, 343, 343});

  // M_p(alpha) = 0 in exact cyclotomic arithmetic.
  for (long p : {3L, 5L, 7L, 11L}) {
    RatPoly mp = minimal_poly_mp(p);
    CHECK(mp.degree() == p - 1);
    CycloElement g = gauss_sum(p);
    int eta = legendre(Int(-1), p);
    CycloElement alpha = (CycloElement::zeta_power(p, 1) * g) * Rat(-eta, p);
    CHECK(eval_at(mp, alpha).is_zero());
  }
}

TEST_CASE("factorization identity against the cyclotomic polynomial") {
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    CHECK(verify_mp_factorization(p));
  }
  // The scaled factor divides Phi_p(eta(-1) p T^2) with cofactor S(-T).
  for (long p : {3L, 5L, 7L}) {
    IntPoly s = scaled_mp(p);
    int eta = legendre(Int(-1), p);
    IntPoly rhs = cyclotomic_prime(p).compose_scaled(Int(eta) * p).substitute_power(2);
    CHECK(rhs.divide_exact(s) == s.compose_scaled(Int(-1)));
  }
}
