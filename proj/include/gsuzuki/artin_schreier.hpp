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

#include "gsuzuki/finite_field.hpp"
#include "gsuzuki/solution_counter.hpp"

namespace gs {

/// Additive polynomial R(X) = sum alpha_i X^(p^i) over F_q with
/// alpha_k != 0; F_p-linear as a map on every extension of F_q.
class PPolynomial {
 public:
  PPolynomial(Field base, std::vector<Element> coeffs);

  const Field& base() const { return base_; }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  int k() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// R evaluated in an extension of the base field (coefficients are
  /// carried across by the canonical lift).
  Element eval(const Element& x) const;

 private:
  Field base_;
  std::vector<Element> coeffs_;
};

/// Genus of the curve Y^p - Y = X R(X): p^k (p-1)/2.
Int genus_fr(const PPolynomial& r);

/// Q_R(a) = Tr_abs(a R(a)) as an integer in [0, p).
long quadratic_form(const PPolynomial& r, const Element& a);

/// B_R(a, b) = (1/2) Tr_abs(a R(b) + b R(a)) as an integer in [0, p).
long bilinear_form(const PPolynomial& r, const Element& a, const Element& b);

struct RadicalReport {
  int n = 0;
  int dim = 0;        // dim_{F_p} of the radical of B_R over F_{q^n}
  bool parity_odd = false;  // parity of m n - dim
};

/// Kernel dimension of the bilinear form over F_{q^n}: the radical is the
/// root set of E_R(T) = R(T)^(p^k) + sum (alpha_i T)^(p^(k-i)), an
/// F_p-linear operator whose kernel is computed by Gaussian elimination.
RadicalReport radical_dimension(const PPolynomial& r, int n);

/// Exact number of affine solutions of Y^p - Y = X R(X) over F_{q^n},
/// by enumeration of X with the trace condition deciding each fiber.
Int count_solutions_oracle(const PPolynomial& r, int n, const CounterOptions& options = {});

/// How a closed-form solution count was settled.
enum class FormProvenance {
  parity,           // odd case: the formula alone is exact
  oracle_resolved,  // even case, sign fixed by the enumeration oracle
  sign_supplied,    // even case, sign supplied by the caller (theorem tag)
  unresolved,       // even case, both candidates returned
};

struct FormCount {
  bool exact = false;
  Int value;          // the count when exact
  Int candidate_low;  // both candidates in the unresolved even case
  Int candidate_high;
  FormProvenance provenance = FormProvenance::unresolved;
  RadicalReport radical;
};

/// Solution count from the radical dimension: q^n when m n - dim is odd,
/// otherwise q^n +- (p-1) p^(dim/2) q^(n/2).  The sign in the even case is
/// never guessed: it is either resolved by the oracle (when the field is
/// within the enumeration limit), taken from supplied_sign, or both
/// candidates are returned.
FormCount count_solutions_by_form(const PPolynomial& r, int n,
                                  const CounterOptions& options = {},
                                  std::optional<int> supplied_sign = std::nullopt);

}  // namespace gs
