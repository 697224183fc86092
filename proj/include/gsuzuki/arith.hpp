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

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "gsuzuki/errors.hpp"

namespace gs {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree order (index i holds the
/// coefficient of T^i) with no trailing zeros; the zero polynomial is the
/// empty coefficient sequence and has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Int& c);
  static IntPoly monomial(const Int& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of T^i (zero beyond the stored range).
  const Int& coeff(std::size_t i) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& rhs) const;
  IntPoly operator-(const IntPoly& rhs) const;
  IntPoly operator*(const IntPoly& rhs) const;
  IntPoly operator*(const Int& scalar) const;
  bool operator==(const IntPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const IntPoly& rhs) const { return !(*this == rhs); }

  /// Exact quotient; throws DivisibilityError when the remainder is nonzero
  /// or a coefficient of the quotient fails to be integral.
  IntPoly divide_exact(const IntPoly& divisor) const;

  /// a(c*T).
  IntPoly compose_scaled(const Int& c) const;
  /// a(T^k), k >= 1.
  IntPoly substitute_power(std::size_t k) const;
  IntPoly pow(unsigned long e) const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

/// Dense polynomial with exact rational coefficients; every coefficient is
/// kept reduced with positive denominator (mpq canonical form).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  explicit RatPoly(const IntPoly& p);

  static RatPoly constant(const Rat& c);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Rat& coeff(std::size_t i) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  RatPoly operator-() const;
  RatPoly operator+(const RatPoly& rhs) const;
  RatPoly operator-(const RatPoly& rhs) const;
  RatPoly operator*(const RatPoly& rhs) const;
  RatPoly operator*(const Rat& scalar) const;
  bool operator==(const RatPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const RatPoly& rhs) const { return !(*this == rhs); }

  /// Euclidean division; the divisor must be nonzero.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;
  /// Exact quotient; throws DivisibilityError on a nonzero remainder.
  RatPoly divide_exact(const RatPoly& divisor) const;

  RatPoly compose_scaled(const Rat& c) const;
  RatPoly derivative() const;
  RatPoly monic() const;

  Rat eval(const Rat& x) const;

  /// True when gcd(f, f') is constant.
  bool is_squarefree() const;

  /// Multiplies through by the common denominator; throws DivisibilityError
  /// if the result is not integral after the given scalar multiplication.
  IntPoly to_int_poly_scaled(const Int& scalar) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Monic gcd of two rational polynomials (Euclidean algorithm).
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

/// Dense matrix of exact rationals, row-major.
class RatMat {
 public:
  RatMat(std::size_t rows, std::size_t cols);
  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  RatMat operator*(const RatMat& rhs) const;
  RatMat operator+(const RatMat& rhs) const;
  RatMat scaled(const Rat& c) const;
  Rat trace() const;
  bool operator==(const RatMat& rhs) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> e_;
};

/// Characteristic polynomial det(T*I - m) of a square rational matrix,
/// computed by the Faddeev-LeVerrier recursion (exact, no pivoting).
RatPoly charpoly(const RatMat& m);

/// Companion matrix of a monic rational polynomial.
RatMat companion(const RatPoly& monic_poly);

/// N_{q^n} from an L-polynomial: Newton's identities give the power sum
/// s_n of the reciprocal roots of l directly from the coefficients, and the
/// count is q^n + 1 - s_n.  Requires deg l = 2g and l(0) = 1 (l = 1 for
/// g = 0).
Int newton_counts(const IntPoly& l, const Int& q, long g, long n);

/// Power sums s_1..s_count of the reciprocal roots of l (deg l = 2g).
std::vector<Int> power_sums(const IntPoly& l, long g, long count);

/// The unique degree-2g polynomial with l(0) = 1 matching the g supplied
/// counts N_{q^1}..N_{q^g} under the functional equation
/// a_{2g-i} = q^{g-i} a_i.  Throws InconsistentCountsError when Newton's
/// recursion produces a non-integral coefficient.
IntPoly reconstruct_l_from_counts(const std::vector<Int>& counts, const Int& q, long g);

Int int_pow(const Int& base, unsigned long e);

}  // namespace gs
