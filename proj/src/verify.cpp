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

#include "gsuzuki/verify.hpp"

#include <numeric>
#include <sstream>

#include "gsuzuki/cyclotomic.hpp"

namespace gs {

namespace {

std::string diff_detail(const Int& a, const Int& b) {
  std::ostringstream os;
  os << a.get_str() << " vs " << b.get_str();
  return os.str();
}

}  // namespace

VerifyReport run_verification(const CurveParams& c, const VerifyOptions& options) {
  VerifyReport report;
  auto add = [&report](std::string name, int n, bool ok, std::string detail = "") {
    report.checks.push_back({std::move(name), n, ok, std::move(detail)});
  };

  // n-independent identities first.
  try {
    int s = period(c);  // throws when the verified period is inconsistent
    add("period", 0, true, std::to_string(s));
  } catch (const Error& e) {
    add("period", 0, false, e.what());
  }
  try {
    gauss_sum(c.p);  // postcondition G^2 = eta(-1) p checked inside
    add("gauss_sum_square", 0, true);
  } catch (const Error& e) {
    add("gauss_sum_square", 0, false, e.what());
  }
  try {
    add("mp_factorization", 0, verify_mp_factorization(c.p));
  } catch (const Error& e) {
    add("mp_factorization", 0, false, e.what());
  }
  try {
    add("substitution_identities", 0,
        verify_substitutions(c, options.samples, options.seed));
  } catch (const Error& e) {
    add("substitution_identities", 0, false, e.what());
  }

  IntPoly l;
  bool have_l = false;
  try {
    l = l_polynomial(c);
    have_l = true;
    add("l_polynomial_battery", 0, true);
  } catch (const Error& e) {
    add("l_polynomial_battery", 0, false, e.what());
  }

  // L is the (q-1)/(p-1) power of the subcover's L-polynomial.
  if (have_l) {
    try {
      Int sub_genus = genus_fr(subcover_p_polynomial(c));
      const int eta_minus1 = legendre(Int(-1), c.p);
      IntPoly shell =
          scaled_mp(c.p).compose_scaled(int_pow(Int(c.p), static_cast<unsigned long>(c.t - 1)));
      IntPoly base = IntPoly(std::vector<Int>{Int(-eta_minus1), Int(0), c.q}) * shell * shell;
      Int e1 = sub_genus / c.p;
      Int e2 = (c.q - 1) / (c.p - 1);
      IntPoly l_sub = base.pow(e1.get_ui());
      bool ok = l_sub.pow(e2.get_ui()) == l;
      // The subcover factor also divides L exactly.
      if (ok && e2 > 1) ok = l.divide_exact(l_sub).degree() == l.degree() - l_sub.degree();
      add("subcover_power_relation", 0, ok);
    } catch (const Error& e) {
      add("subcover_power_relation", 0, false, e.what());
    }
  }

  int s_arith = legendre(Int(-1), c.p) == 1 ? 2 * static_cast<int>(c.p)
                                            : 4 * static_cast<int>(c.p);

  for (int n = 1; n <= options.n_max; ++n) {
    CountReport formula = point_count(c, n);
    Int qn = int_pow(c.q, static_cast<unsigned long>(n));

    bool oracle_feasible = qn <= options.counter.limit;
    if (oracle_feasible) {
      try {
        Int oracle = brute_force_count(c, n, options.counter);
        add("formula_vs_oracle", n, oracle == formula.N, diff_detail(formula.N, oracle));
      } catch (const Error& e) {
        add("formula_vs_oracle", n, false, e.what());
      }
      try {
        Int dec = decomposition_count(c, n, options.counter);
        add("formula_vs_decomposition", n, dec == formula.N, diff_detail(formula.N, dec));
      } catch (const Error& e) {
        add("formula_vs_decomposition", n, false, e.what());
      }
    }

    // Supersingular propagation from n_1 = gcd(n, s).
    try {
      int n1 = std::gcd(n, s_arith);
      CountReport base;
      Int qn1 = int_pow(c.q, static_cast<unsigned long>(n1));
      if (qn1 <= options.counter.limit) {
        base.n = n1;
        base.N = brute_force_count(c, n1, options.counter);
        base.method = CountMethod::oracle;
      } else {
        base = point_count(c, n1);
      }
      Int extended = mcguire_extend(c, base, n);
      add("formula_vs_mcguire", n, extended == formula.N, diff_detail(formula.N, extended));
    } catch (const Error& e) {
      add("formula_vs_mcguire", n, false, e.what());
    }

    if (have_l) {
      try {
        if (!c.g.fits_slong_p()) throw ResourceError("genus too large");
        Int newton = newton_counts(l, c.q, c.g.get_si(), n);
        add("formula_vs_newton", n, newton == formula.N, diff_detail(formula.N, newton));
      } catch (const Error& e) {
        add("formula_vs_newton", n, false, e.what());
      }
    }

    // The extension L-polynomial encodes N_{q^n} as its own n = 1 count.
    try {
      IntPoly lx = l_polynomial_ext(c, n);
      if (!c.g.fits_slong_p()) throw ResourceError("genus too large");
      Int back = newton_counts(lx, qn, c.g.get_si(), 1);
      add("l_ext_first_count", n, back == formula.N, diff_detail(formula.N, back));
    } catch (const Error& e) {
      add("l_ext_first_count", n, false, e.what());
    }

    // Radical dimension pattern for the subcover form.
    if (n <= 2 * c.p && c.m * n <= 40) {
      try {
        RadicalReport rad = radical_dimension(subcover_p_polynomial(c), n);
        int expect = c.m + (n % c.p == 0 ? 1 : 0);
        add("radical_dimension", n, rad.dim == expect,
            std::to_string(rad.dim) + " vs " + std::to_string(expect));
      } catch (const Error& e) {
        add("radical_dimension", n, false, e.what());
      }
    }
  }

  report.ok = true;
  for (const VerifyCheck& chk : report.checks) report.ok = report.ok && chk.ok;
  return report;
}

}  // namespace gs
