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

#include <memory>
#include <optional>
#include <vector>

#include "gsuzuki/arith.hpp"
#include "gsuzuki/errors.hpp"

namespace gs {

class Element;

/// GF(p^d) realized as F_p[X]/(f) with a deterministic modulus: monic
/// degree-d polynomials are enumerated in lexicographic order of the
/// coefficient tuple (a_{d-1}, ..., a_0) and the first irreducible one wins.
/// For d = 1 this yields f = X, identifying F_p with integers in [0, p).
///
/// Fields are immutable and interned: Field::get(p, d) returns the same
/// shared representation for the same parameters, so element arithmetic can
/// detect field mismatches by identity.
class Field {
 public:
  /// Empty handle; usable only after assignment from Field::get.
  Field() = default;

  /// p must be an odd prime (checked by trial division), d >= 1.
  static Field get(long p, int d);

  long p() const;
  int degree() const;
  /// Monic modulus, ascending coefficients, length degree() + 1.
  const std::vector<long>& modulus() const;
  /// p^d.
  Int order() const;

  Element zero() const;
  Element one() const;
  /// Element from coefficient vector (length d, entries reduced mod p).
  Element element(std::vector<long> coeffs) const;
  /// Canonical lift of an integer into the prime subfield.
  Element from_int(long value) const;
  /// Element with index i in the enumeration order index = sum c_i p^i.
  Element from_index(const Int& index) const;

  bool operator==(const Field& rhs) const { return rep_ == rhs.rep_; }
  bool operator!=(const Field& rhs) const { return rep_ != rhs.rep_; }

  struct Rep;
  const Rep* rep() const { return rep_.get(); }

 private:
  explicit Field(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

/// Element of a Field; a length-d coefficient vector over F_p. Immutable in
/// practice: all operations return new values.
class Element {
 public:
  Element() = default;

  const Field& field() const { return field_; }
  const std::vector<long>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element operator-() const;
  Element operator*(const Element& rhs) const;
  Element operator/(const Element& rhs) const;
  bool operator==(const Element& rhs) const;
  bool operator!=(const Element& rhs) const { return !(*this == rhs); }

  /// Multiplicative inverse; throws DivisionByZeroError on zero.
  Element inv() const;
  /// Square-and-multiply power with an arbitrary-precision exponent
  /// (negative exponents invert first).
  Element pow(const Int& e) const;
  /// e^(p^k), via the precomputed Frobenius matrix (k may exceed d).
  Element frobenius(long k = 1) const;

  /// Position in the deterministic enumeration order: sum coeffs[i] p^i.
  Int index() const;

 private:
  friend class Field;
  Element(Field f, std::vector<long> coeffs);
  Field field_;
  std::vector<long> coeffs_;
};

/// Relative trace to the degree-r subfield: sum of e^(p^(r i)) for
/// 0 <= i < d/r.  r must divide d; r = 1 is the absolute trace.
Element trace(const Element& e, int sub_degree = 1);

/// Absolute trace as an integer in [0, p).
long trace_int(const Element& e);

/// e^((p^d - 1)/(p - 1)) for nonzero e, 0 for e = 0; lands in F_p.
Element norm_absolute(const Element& e);

/// Absolute norm as an integer in [0, p).
long norm_int(const Element& e);

/// Legendre symbol of k mod p by Euler's criterion: 0 if p | k, +1 for
/// nonzero squares, -1 otherwise.  p must be an odd prime.
int legendre(const Int& k, long p);

/// Number of y in c's field with y^(p^r) - y = c: p^r when the relative
/// trace of c to the degree-r subfield vanishes, 0 otherwise.  r | d.
Int artin_schreier_fiber_count(const Element& c, int r);

/// Any solution y of y^(p^r) - y = c, if one exists (Gaussian elimination
/// on the F_p-linear map).
std::optional<Element> solve_artin_schreier(const Element& c, int r);

/// Basis of the degree-r subfield, i.e. the kernel of Frobenius^r - id,
/// in a deterministic (reduced echelon) order.  r must divide d.
std::vector<Element> subfield_basis(const Field& f, int r);

/// The canonical lift GF(p, m) -> GF(p, m n): the source modulus is
/// re-rooted inside the target's degree-m subfield and the root with the
/// least enumeration index is used, making the embedding reproducible.
class Embedding {
 public:
  Embedding(const Field& from, const Field& to);
  const Field& from() const { return from_; }
  const Field& to() const { return to_; }
  Element operator()(const Element& e) const;

 private:
  Field from_, to_;
  std::vector<Element> root_powers_;  // rho^0 .. rho^(m-1)
};

/// Interned Embedding instances (the root search is deterministic, so the
/// cached map is canonical).
const Embedding& canonical_embedding(const Field& from, const Field& to);

/// True when n has no divisor in [2, sqrt(n)]; helper for parameter checks.
bool is_prime(long n);

}  // namespace gs
