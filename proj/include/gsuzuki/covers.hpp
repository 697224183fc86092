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

#include <optional>
#include <vector>

#include "gsuzuki/suzuki.hpp"

namespace gs {

/// An etale cover of degree i inherits genus i (g - 1) + 1 and at least
/// i N_{q^n} rational points over F_{q^n}.
struct CoverReport {
  long p = 0;
  int t = 0;
  int n = 0;
  Int degree;
  Int genus;
  Int point_bound;
};

/// Both hypotheses of the L(1)-ratio cover construction, checked exactly:
/// N_q = N_{q^n} and L_q(1) < L_{q^n}(1).
bool voloch_precondition(const CurveParams& c, int n);

/// Partial factorization by trial division up to prime_cap; whatever is
/// left unfactored is reported as the opaque cofactor.
struct Factorization {
  std::vector<std::pair<Int, int>> factors;  // (prime, exponent)
  Int cofactor = 1;
};
Factorization trial_factor(const Int& value, long prime_cap);

/// All divisors composable from the found prime factors, sorted, capped.
std::vector<Int> divisors_up_to(const Factorization& f, const Int& cap);

/// Cover table over F_{q^n}: the index r = L_{q^n}(1) / L_q(1) must divide
/// exactly; every divisor i of r with 1 < i <= max_degree yields a report
/// (degree i, genus i(g-1)+1, point bound i N_{q^n}).  Each row is checked
/// against the Hasse-Weil ceiling.  Requires voloch_precondition.
std::vector<CoverReport> cover_table(const CurveParams& c, int n, const Int& max_degree,
                                     long prime_cap = 1000000);

/// Documented point-count ceilings for the two tabulated (genus, q) pairs;
/// absent for anything else (the general bound is out of scope).
std::optional<long> oesterle_note(long genus, long q);

}  // namespace gs
