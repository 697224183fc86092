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

#include "gsuzuki/covers.hpp"

using namespace gs;

TEST_CASE("voloch precondition") {
  CHECK(voloch_precondition(CurveParams(7, 1), 2));
  CHECK(voloch_precondition(CurveParams(5, 1), 3));
  CHECK_FALSE(voloch_precondition(CurveParams(3, 1), 3));
  CHECK_THROWS_AS(voloch_precondition(CurveParams(3, 1), 1), ParameterError);
}

TEST_CASE("cover table for (7,1) over F_49") {
  CurveParams c(7, 1);
  std::vector<CoverReport> table = cover_table(c, 2, Int(8));
  REQUIRE(table.size() == 3);
  CHECK(table[0].degree == 2);
  CHECK(table[0].genus == 41);
  CHECK(table[0].point_bound == 100);
  CHECK(table[1].degree == 4);
  CHECK(table[1].genus == 81);
  CHECK(table[1].point_bound == 200);
  CHECK(table[2].degree == 8);
  CHECK(table[2].genus == 161);
  CHECK(table[2].point_bound == 400);

  // r = L_{q^2}(1) / L_q(1) = 2^9 113^6.
  Int r = jacobian_order(c, 2) / jacobian_order(c, 1);
  CHECK(jacobian_order(c, 2) % jacobian_order(c, 1) == 0);
  CHECK(r == int_pow(Int(2), 9) * int_pow(Int(113), 6));

  // Consistency with the documented ceilings.
  CHECK(table[2].point_bound <= *oesterle_note(161, 7));
  CHECK(table[1].point_bound <= *oesterle_note(81, 7));

  CHECK_THROWS_AS(cover_table(CurveParams(3, 1), 3, Int(8)), ParameterError);
}

TEST_CASE("cover table for (5,1) over F_25") {
  CurveParams c(5, 1);
  std::vector<CoverReport> table = cover_table(c, 2, Int(50));
  CHECK(!table.empty());
  Int nq2 = point_count(c, 2).N;
  Int r = jacobian_order(c, 2) / jacobian_order(c, 1);
  for (const CoverReport& rep : table) {
    CHECK(rep.genus == rep.degree * 9 + 1);
    CHECK(rep.point_bound == rep.degree * nq2);
    CHECK(r % rep.degree == 0);
  }
}

TEST_CASE("documented point-count ceilings") {
  CHECK(oesterle_note(161, 7) == 410);
  CHECK(oesterle_note(81, 7) == 226);
  CHECK_FALSE(oesterle_note(41, 7).has_value());
}

TEST_CASE("trial factorization") {
  Factorization f = trial_factor(int_pow(Int(2), 9) * int_pow(Int(113), 6), 1000000);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair<Int, int>{Int(2), 9});
  CHECK(f.factors[1] == std::pair<Int, int>{Int(113), 6});
  CHECK(f.cofactor == 1);

  // Product of prime powers times the cofactor reconstructs the input.
  Int big = Int("1000003") * Int("1000033") * 8;  // two primes above a tiny cap
  Factorization g = trial_factor(big, 100);
  Int rebuilt = g.cofactor;
  for (const auto& [prime, exp] : g.factors) rebuilt *= int_pow(prime, exp);
  CHECK(rebuilt == big);
  CHECK(g.cofactor > 1);

  CHECK(divisors_up_to(trial_factor(Int(1), 100), Int(100)) == std::vector<Int>{1});
  std::vector<Int> divs = divisors_up_to(trial_factor(Int(12), 100), Int(6));
  CHECK(divs == std::vector<Int>{Int(1), Int(2), Int(3), Int(4), Int(6)});
}
