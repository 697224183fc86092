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

#include "gsuzuki/artin_schreier.hpp"

namespace gs {

PPolynomial::PPolynomial(Field base, std::vector<Element> coeffs)
    : base_(std::move(base)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ParameterError("PPolynomial: empty coefficient list");
  for (const Element& c : coeffs_) {
    if (c.field() != base_) throw FieldMismatchError("PPolynomial: coefficient field mismatch");
  }
  if (coeffs_.back().is_zero()) throw ParameterError("PPolynomial: leading coefficient is zero");
}

Element PPolynomial::eval(const Element& x) const {
  const Field& ext = x.field();
  if (ext.p() != base_.p() || ext.degree() % base_.degree() != 0)
    throw FieldMismatchError("PPolynomial: argument field is not an extension of the base");
  const Embedding& emb = canonical_embedding(base_, ext);
  Element acc = ext.zero();
  for (int i = 0; i <= k(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    acc = acc + emb(coeffs_[i]) * x.frobenius(i);
  }
  return acc;
}

Int genus_fr(const PPolynomial& r) {
  const long p = r.base().p();
  return int_pow(Int(p), static_cast<unsigned long>(r.k())) * (p - 1) / 2;
}

long quadratic_form(const PPolynomial& r, const Element& a) {
  return trace_int(a * r.eval(a));
}

long bilinear_form(const PPolynomial& r, const Element& a, const Element& b) {
  if (a.field() != b.field()) throw FieldMismatchError("bilinear_form: mixed fields");
  const long p = a.field().p();
  long t = trace_int(a * r.eval(b) + b * r.eval(a));
  // Halve in F_p (p odd).
  long half = (p + 1) / 2;
  return (t * half) % p;
}

namespace {

// E_R(T) = R(T)^(p^k) + sum_i (alpha_i T)^(p^(k-i)) as a map on F_{q^n}.
Element apply_er(const PPolynomial& r, const Embedding& emb, const Element& x) {
  const int k = r.k();
  Element acc = r.eval(x).frobenius(k);
  for (int i = 0; i <= k; ++i) {
    if (r.coeffs()[i].is_zero()) continue;
    acc = acc + (emb(r.coeffs()[i]) * x).frobenius(k - i);
  }
  return acc;
}

}  // namespace

RadicalReport radical_dimension(const PPolynomial& r, int n) {
  if (n < 1) throw ParameterError("radical_dimension: n must be >= 1");
  const Field& base = r.base();
  const int m = base.degree();
  const long p = base.p();
  Field ext = Field::get(p, m * n);
  const Embedding& emb = canonical_embedding(base, ext);
  const int dim = m * n;

  // Matrix of E_R over F_p and its kernel dimension.
  std::vector<std::vector<long>> mat(dim, std::vector<long>(dim, 0));
  for (int j = 0; j < dim; ++j) {
    std::vector<long> basis(dim, 0);
    basis[j] = 1;
    Element img = apply_er(r, emb, ext.element(std::move(basis)));
    for (int i = 0; i < dim; ++i) mat[i][j] = img.coeffs()[i];
  }
  int rank = 0;
  int row = 0;
  for (int col = 0; col < dim && row < dim; ++col) {
    int sel = -1;
    for (int i = row; i < dim; ++i) {
      if (mat[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(mat[sel], mat[row]);
    // Normalize and eliminate below.
    long inv = 1;
    {
      long a = mat[row][col] % p, t = 0, nt = 1, rr = p, nr = a;
      while (nr != 0) {
        long q = rr / nr;
        long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = rr - q * nr;
        rr = nr;
        nr = tmp;
      }
      inv = ((t % p) + p) % p;
    }
    for (int j2 = col; j2 < dim; ++j2) mat[row][j2] = (mat[row][j2] * inv) % p;
    for (int i = row + 1; i < dim; ++i) {
      long f = mat[i][col] % p;
      if (f == 0) continue;
      for (int j2 = col; j2 < dim; ++j2) {
        mat[i][j2] = ((mat[i][j2] - f * mat[row][j2]) % p + p) % p;
      }
    }
    ++row;
    ++rank;
  }
  RadicalReport rep;
  rep.n = n;
  rep.dim = dim - rank;
  rep.parity_odd = ((m * n - rep.dim) % 2) != 0;
  return rep;
}

Int count_solutions_oracle(const PPolynomial& r, int n, const CounterOptions& options) {
  if (n < 1) throw ParameterError("count_solutions_oracle: n must be >= 1");
  const Field& base = r.base();
  const int m = base.degree();
  const long p = base.p();
  Field ext = Field::get(p, m * n);
  const Embedding& emb = canonical_embedding(base, ext);

  // Condition Tr_abs(x R(x)) = 0, fibers of size p.
  std::vector<std::vector<long>> u_cols = linear_map_columns(ext, [](const Element& e) { return e; });
  std::vector<Element> lifted;
  for (const Element& c : r.coeffs()) lifted.push_back(emb(c));
  std::vector<std::vector<long>> v_cols = linear_map_columns(ext, [&](const Element& e) {
    Element acc = ext.zero();
    for (int i = 0; i <= r.k(); ++i) {
      if (lifted[i].is_zero()) continue;
      acc = acc + lifted[i] * e.frobenius(i);
    }
    return acc;
  });
  std::uint64_t good = count_trace_zero(ext, u_cols, v_cols, {ext.one()}, options);
  return Int(static_cast<unsigned long>(good)) * p;
}

FormCount count_solutions_by_form(const PPolynomial& r, int n, const CounterOptions& options,
                                  std::optional<int> supplied_sign) {
  FormCount out;
  out.radical = radical_dimension(r, n);
  const int m = r.base().degree();
  const long p = r.base().p();
  Int qn = int_pow(Int(p), static_cast<unsigned long>(m * n));
  if (out.radical.parity_odd) {
    out.exact = true;
    out.value = qn;
    out.provenance = FormProvenance::parity;
    return out;
  }
  // Even case: q^n +- (p-1) p^((dim + m n)/2).
  Int dev = Int(p - 1) * int_pow(Int(p), static_cast<unsigned long>((out.radical.dim + m * n) / 2));
  out.candidate_low = qn - dev;
  out.candidate_high = qn + dev;
  if (supplied_sign.has_value()) {
    if (*supplied_sign != 1 && *supplied_sign != -1)
      throw ParameterError("count_solutions_by_form: supplied sign must be +1 or -1");
    out.exact = true;
    out.value = *supplied_sign > 0 ? out.candidate_high : out.candidate_low;
    out.provenance = FormProvenance::sign_supplied;
    return out;
  }
  Int ext_order = int_pow(Int(p), static_cast<unsigned long>(m * n));
  if (ext_order <= options.limit) {
    Int oracle = count_solutions_oracle(r, n, options);
    if (oracle != out.candidate_low && oracle != out.candidate_high)
      throw ConsistencyError("count_solutions_by_form: oracle outside the candidate set");
    out.exact = true;
    out.value = oracle;
    out.provenance = FormProvenance::oracle_resolved;
    return out;
  }
  out.exact = false;
  out.provenance = FormProvenance::unresolved;
  return out;
}

}  // namespace gs
