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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsuzuki/artin_schreier.hpp"
#include "gsuzuki/finite_field.hpp"
#include "gsuzuki/solution_counter.hpp"

namespace gs {

/// One generalized Suzuki curve y^q - y = x^(q_0) (x^q - x): an odd prime p
/// and t >= 1, with m = 2t - 1, q_0 = p^t, q = p^m and genus q_0 (q-1)/2.
struct CurveParams {
  CurveParams(long p, int t);

  long p;
  int t;
  int m;
  Int q0;
  Int q;
  Int g;

  /// The base field F_q = GF(p, m).
  Field fq() const;
  /// F_{q^n} = GF(p, m n).
  Field fqn(int n) const;
  long q_as_long() const;
  unsigned long g_over_p() const;  // g / p (always integral; verified)

  bool operator==(const CurveParams& rhs) const { return p == rhs.p && t == rhs.t; }
};

enum class Maximality { Maximal, Minimal, Neither };
enum class CountMethod { formula, oracle, mcguire, decomposition };

const char* to_string(Maximality m);
const char* to_string(CountMethod m);

struct CountReport {
  int n = 0;
  Int N;
  CountMethod method = CountMethod::formula;
  Maximality maximality = Maximality::Neither;
};

/// Closed-form point count over F_{q^n}, all four parity cases, in integer
/// arithmetic only (q^(n/2) appears when n is even and q^(n/2)/sqrt(p)
/// = p^((mn-1)/2) when m n is odd).
CountReport point_count(const CurveParams& c, int n);

/// Enumeration count: for each x in F_{q^n} the fiber of y^q - y =
/// x^(q_0)(x^q - x) has size q exactly when the trace of the right side
/// down to F_q vanishes; the point at infinity adds one.
Int brute_force_count(const CurveParams& c, int n, const CounterOptions& options = {});

/// L-polynomial over F_q: ((q T^2 - eta(-1)) S_p(p^(t-1) T)^2)^(g/p) where
/// S_p is the scaled minimal polynomial p^((p-1)/2) M_p.  Degree, constant
/// term and the functional equation are verified before returning.
IntPoly l_polynomial(const CurveParams& c);

/// L-polynomial over F_{q^n}, selected by the parity of n and p | n;
/// coincides with l_polynomial for n = 1.
IntPoly l_polynomial_ext(const CurveParams& c, int n);

/// |J(F_{q^n})| = L_{F_{q^n}}(1).
Int jacobian_order(const CurveParams& c, int n);

/// For (p, t) = (7, 1) this returns the note documenting the known
/// mismatch between the published group structure of J(F_7) and L(1);
/// absent for every other curve.
std::optional<std::string> jacobian_discrepancy_note(const CurveParams& c);

/// Period of the normalized Weil numbers: 2p when eta(-1) = 1, 4p when
/// eta(-1) = -1; both the value and its minimality are verified against the
/// extension L-polynomials.
int period(const CurveParams& c);

/// Propagates a base count N_{q^(n_1)} (n_1 = gcd(n, period)) to N_{q^n}
/// through the supersingular propagation cases.
Int mcguire_extend(const CurveParams& c, const CountReport& base, int n);

/// Point count through the degree-p subcover y^p - y = x (x^(q/q_0) -
/// x^(q_0)): the deviation from q^n + 1 scales by (q-1)/(p-1).
Int decomposition_count(const CurveParams& c, int n, const CounterOptions& options = {});

/// The additive polynomial X^(q/q_0) - X^(q_0) over F_q.
PPolynomial subcover_p_polynomial(const CurveParams& c);

/// Spot checks of the substitution identities behind the subcover
/// construction on random points over F_{q^p}; returns false only if an
/// identity fails (which would falsify the decomposition route).
bool verify_substitutions(const CurveParams& c, int samples, std::uint64_t seed);

/// Curve automorphism (x, y) -> (alpha x + beta, alpha beta^(q_0) x +
/// alpha^(q_0+1) y + gamma) with alpha in F_q^*, beta, gamma in F_q.
struct Automorphism {
  Automorphism(const CurveParams& curve, Element alpha, Element beta, Element gamma);
  CurveParams curve;
  Element alpha, beta, gamma;
  bool operator==(const Automorphism& rhs) const;
};

using CurvePoint = std::pair<Element, Element>;

Automorphism aut_identity(const CurveParams& c);

/// Image of a point over any F_{q^n}; entries are carried into the point's
/// field by the canonical lift.
CurvePoint aut_apply(const Automorphism& a, const CurvePoint& pt);

/// Composition in application order: aut_apply(aut_compose(a, b), pt) equals
/// aut_apply(b, aut_apply(a, pt)).
Automorphism aut_compose(const Automorphism& a, const Automorphism& b);
Automorphism aut_inverse(const Automorphism& a);

/// True when y^q - y = x^(q_0)(x^q - x) holds for the pair.
bool on_curve(const CurveParams& c, const CurvePoint& pt);

/// All affine F_q-rational points.
std::vector<CurvePoint> affine_points(const CurveParams& c);

struct AutAuditReport {
  Int order;         // q^2 (q - 1)
  Int sylow_order;   // q^2
  Int cyclic_order;  // q - 1
  bool exhaustive_pairs = false;
  bool ok = false;
  std::vector<std::string> failures;
};

/// Group-theoretic audit of the automorphism family: axioms, the order
/// q^2 (q-1), the normal subgroup of order q^2, the cyclic complement of
/// order q-1 with an explicit generator, and the permutation action on the
/// affine point set.  Pairwise checks switch to random sampling above 10^5
/// group elements.
AutAuditReport aut_group_audit(const CurveParams& c, std::uint64_t seed);

}  // namespace gs
