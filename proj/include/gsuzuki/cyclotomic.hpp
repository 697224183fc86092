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

#include <vector>

#include "gsuzuki/arith.hpp"

namespace gs {

/// Element of Q(zeta_p) for an odd prime p, written over the power basis
/// 1, zeta, ..., zeta^(p-2); zeta^(p-1) is reduced through
/// Phi_p(zeta) = 0, i.e. zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
class CycloElement {
 public:
  /// Zero element of Q(zeta_p).
  explicit CycloElement(long p);
  CycloElement(long p, std::vector<Rat> coords);

  static CycloElement zeta_power(long p, long k);
  static CycloElement from_rational(long p, const Rat& r);

  long p() const { return p_; }
  const std::vector<Rat>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;
  /// The rational part when is_rational(); throws otherwise.
  Rat rational_value() const;

  CycloElement operator+(const CycloElement& rhs) const;
  CycloElement operator-(const CycloElement& rhs) const;
  CycloElement operator-() const;
  CycloElement operator*(const CycloElement& rhs) const;
  CycloElement operator*(const Rat& scalar) const;
  bool operator==(const CycloElement& rhs) const;
  bool operator!=(const CycloElement& rhs) const { return !(*this == rhs); }

 private:
  long p_;
  std::vector<Rat> coords_;  // length p-1
};

/// Quadratic Gauss sum G = sum_{j=1}^{p-1} eta(j) zeta^j; the postcondition
/// G^2 = eta(-1) p is verified exactly before returning.
CycloElement gauss_sum(long p);

/// Galois action zeta -> zeta^i for gcd(i, p) = 1.
CycloElement galois_apply(long i, const CycloElement& e);

/// Phi_p(T) = 1 + T + ... + T^(p-1).
IntPoly cyclotomic_prime(long p);

/// Minimal polynomial M_p of -zeta_p / ptilde^(1/2), where ptilde^(1/2) is
/// the Gauss sum realization of sqrt(eta(-1) p) inside Q(zeta_p).  Computed
/// as the characteristic polynomial of the multiplication-by-alpha matrix
/// over the power basis; degree p-1, squarefree, and the scaled polynomial
/// p^((p-1)/2) M_p is integral with constant term 1 and a positive linear
/// coefficient -- all verified, ConsistencyError otherwise.
RatPoly minimal_poly_mp(long p);

/// p^((p-1)/2) * M_p(T) as an integer polynomial.
IntPoly scaled_mp(long p);

/// Exact check of p^(p-1) M_p(T) M_p(-T) = Phi_p(eta(-1) p T^2).
bool verify_mp_factorization(long p);

/// Evaluate a rational polynomial at a cyclotomic argument.
CycloElement eval_at(const RatPoly& poly, const CycloElement& x);

}  // namespace gs
