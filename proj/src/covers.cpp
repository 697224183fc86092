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

#include "gsuzuki/covers.hpp"

#include <algorithm>

namespace gs {

bool voloch_precondition(const CurveParams& c, int n) {
  if (n < 2) throw ParameterError("voloch_precondition: n must be >= 2");
  Int n1 = point_count(c, 1).N;
  Int nn = point_count(c, n).N;
  if (n1 != nn) return false;
  return jacobian_order(c, 1) < jacobian_order(c, n);
}

Factorization trial_factor(const Int& value, long prime_cap) {
  if (value < 1) throw ParameterError("trial_factor: value must be positive");
  Factorization out;
  Int rest = value;
  Int f = 2;
  while (f <= prime_cap && f * f <= rest) {
    if (rest % f == 0) {
      int e = 0;
      while (rest % f == 0) {
        rest /= f;
        ++e;
      }
      out.factors.push_back({f, e});
    }
    ++f;
  }
  if (rest > 1 && f * f > rest) {
    // Every candidate up to sqrt(rest) was tried, so the remainder is prime.
    out.factors.push_back({rest, 1});
    rest = 1;
  }
  out.cofactor = rest;
  return out;
}

std::vector<Int> divisors_up_to(const Factorization& f, const Int& cap) {
  std::vector<Int> divisors{1};
  for (const auto& [prime, exp] : f.factors) {
    std::size_t existing = divisors.size();
    Int power = 1;
    for (int e = 1; e <= exp; ++e) {
      power *= prime;
      if (power > cap) break;
      for (std::size_t i = 0; i < existing; ++i) {
        Int d = divisors[i] * power;
        if (d <= cap) divisors.push_back(d);
      }
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

std::vector<CoverReport> cover_table(const CurveParams& c, int n, const Int& max_degree,
                                     long prime_cap) {
  if (!voloch_precondition(c, n))
    throw ParameterError("cover_table: the L(1)-ratio hypotheses do not hold for this n");
  Int j1 = jacobian_order(c, 1);
  Int jn = jacobian_order(c, n);
  Int r, rem;
  mpz_fdiv_qr(r.get_mpz_t(), rem.get_mpz_t(), jn.get_mpz_t(), j1.get_mpz_t());
  if (rem != 0)
    throw ConsistencyError("cover_table: L_{q^n}(1) is not divisible by L_q(1)");
  std::vector<CoverReport> table;
  if (r == 1) return table;

  Int nqn = point_count(c, n).N;
  Int qn = int_pow(c.q, static_cast<unsigned long>(n));
  Factorization fact = trial_factor(r, prime_cap);
  for (const Int& i : divisors_up_to(fact, std::min(max_degree, r))) {
    if (i == 1) continue;
    CoverReport rep;
    rep.p = c.p;
    rep.t = c.t;
    rep.n = n;
    rep.degree = i;
    rep.genus = i * (c.g - 1) + 1;
    rep.point_bound = i * nqn;
    // Hasse-Weil ceiling: (bound - (q^n + 1))^2 <= 4 genus^2 q^n when the
    // bound exceeds q^n + 1.
    Int excess = rep.point_bound - (qn + 1);
    if (excess > 0 && excess * excess > 4 * rep.genus * rep.genus * qn)
      throw ConsistencyError("cover_table: a cover bound violates the Hasse-Weil ceiling");
    table.push_back(std::move(rep));
  }
  return table;
}

std::optional<long> oesterle_note(long genus, long q) {
  if (q == 7 && genus == 161) return 410;
  if (q == 7 && genus == 81) return 226;
  return std::nullopt;
}

}  // namespace gs
