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

#include "gsuzuki/arith.hpp"

#include <algorithm>
#include <sstream>

namespace gs {

namespace {
const Int kIntZero = 0;
const Rat kRatZero = 0;
}  // namespace

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, std::size_t degree) {
  std::vector<Int> v(degree + 1, kIntZero);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kIntZero;
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
  std::vector<Int> v(std::max(coeffs_.size(), rhs.coeffs_.size()), kIntZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
  std::vector<Int> v(std::max(coeffs_.size(), rhs.coeffs_.size()), kIntZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] -= rhs.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPoly();
  std::vector<Int> v(coeffs_.size() + rhs.coeffs_.size() - 1, kIntZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Int& scalar) const {
  std::vector<Int> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * scalar;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (is_zero()) return IntPoly();
  if (degree() < divisor.degree())
    throw DivisibilityError("exact polynomial division: degree of dividend too small");
  std::vector<Int> rem = coeffs_;
  std::vector<Int> quot(coeffs_.size() - divisor.coeffs_.size() + 1, kIntZero);
  const Int& lead = divisor.coeffs_.back();
  for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
    Int& top = rem[i + divisor.degree()];
    if (top == 0) continue;
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) throw DivisibilityError("exact polynomial division: non-integral quotient");
    quot[i] = q;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) {
      rem[i + j] -= q * divisor.coeffs_[j];
    }
  }
  for (const Int& c : rem) {
    if (c != 0) throw DivisibilityError("exact polynomial division: nonzero remainder");
  }
  return IntPoly(std::move(quot));
}

IntPoly IntPoly::compose_scaled(const Int& c) const {
  std::vector<Int> v(coeffs_.size());
  Int power = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    v[i] = coeffs_[i] * power;
    power *= c;
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::substitute_power(std::size_t k) const {
  if (k == 0) throw ParameterError("substitute_power: k must be >= 1");
  if (is_zero()) return IntPoly();
  std::vector<Int> v(static_cast<std::size_t>(degree()) * k + 1, kIntZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(unsigned long e) const {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (long i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
  return acc;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (long i = degree(); i >= 0; --i) acc = acc * x + Rat(coeffs_[i]);
  return acc;
}

std::string IntPoly::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i];
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// RatPoly

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  for (Rat& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly::RatPoly(const IntPoly& p) {
  coeffs_.reserve(p.coeffs().size());
  for (const Int& c : p.coeffs()) coeffs_.emplace_back(c);
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& RatPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kRatZero;
}

RatPoly RatPoly::operator-() const {
  std::vector<Rat> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator+(const RatPoly& rhs) const {
  std::vector<Rat> v(std::max(coeffs_.size(), rhs.coeffs_.size()), kRatZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& rhs) const {
  std::vector<Rat> v(std::max(coeffs_.size(), rhs.coeffs_.size()), kRatZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] -= rhs.coeffs_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const RatPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return RatPoly();
  std::vector<Rat> v(coeffs_.size() + rhs.coeffs_.size() - 1, kRatZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const Rat& scalar) const {
  std::vector<Rat> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * scalar;
  return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (degree() < divisor.degree()) return {RatPoly(), *this};
  std::vector<Rat> rem = coeffs_;
  std::vector<Rat> quot(coeffs_.size() - divisor.coeffs_.size() + 1, kRatZero);
  const Rat& lead = divisor.coeffs_.back();
  for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
    Rat q = rem[i + divisor.degree()] / lead;
    quot[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) {
      rem[i + j] -= q * divisor.coeffs_[j];
    }
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::divide_exact(const RatPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw DivisibilityError("exact polynomial division: nonzero remainder");
  return q;
}

RatPoly RatPoly::compose_scaled(const Rat& c) const {
  std::vector<Rat> v(coeffs_.size());
  Rat power = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    v[i] = coeffs_[i] * power;
    power *= c;
  }
  return RatPoly(std::move(v));
}

RatPoly RatPoly::derivative() const {
  if (degree() < 1) return RatPoly();
  std::vector<Rat> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(v));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / coeffs_.back());
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (long i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
  return acc;
}

bool RatPoly::is_squarefree() const {
  if (degree() < 1) return true;
  return poly_gcd(*this, derivative()).degree() == 0;
}

IntPoly RatPoly::to_int_poly_scaled(const Int& scalar) const {
  std::vector<Int> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Rat scaled = coeffs_[i] * Rat(scalar);
    if (scaled.get_den() != 1)
      throw DivisibilityError("to_int_poly_scaled: coefficient is not integral");
    v[i] = scaled.get_num();
  }
  return IntPoly(std::move(v));
}

std::string RatPoly::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i];
  }
  os << "]";
  return os.str();
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = x.divmod(y);
    (void)q;
    x = y;
    y = r;
  }
  return x.monic();
}

// ---------------------------------------------------------------------------
// RatMat

RatMat::RatMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, kRatZero) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::operator*(const RatMat& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
  RatMat r(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        r.at(i, j) += a * rhs.at(k, j);
      }
    }
  }
  return r;
}

RatMat RatMat::operator+(const RatMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum shape mismatch");
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + rhs.e_[i];
  return r;
}

RatMat RatMat::scaled(const Rat& c) const {
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

Rat RatMat::trace() const {
  if (rows_ != cols_) throw DimensionError("trace of a non-square matrix");
  Rat t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool RatMat::operator==(const RatMat& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && e_ == rhs.e_;
}

RatPoly charpoly(const RatMat& m) {
  if (m.rows() != m.cols()) throw DimensionError("charpoly of a non-square matrix");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier: B_1 = I, c_{n-k} = -tr(A B_k)/k, B_{k+1} = A B_k + c_{n-k} I.
  std::vector<Rat> coeffs(n + 1, kRatZero);
  coeffs[n] = 1;
  RatMat b = RatMat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMat ab = m * b;
    Rat c = -ab.trace() / Rat(static_cast<long>(k));
    coeffs[n - k] = c;
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) ab.at(i, i) += c;
      b = ab;
    }
  }
  return RatPoly(std::move(coeffs));
}

RatMat companion(const RatPoly& monic_poly) {
  const long n = monic_poly.degree();
  if (n < 1) throw DimensionError("companion matrix needs degree >= 1");
  if (monic_poly.coeff(n) != 1) throw ParameterError("companion matrix needs a monic polynomial");
  RatMat m(n, n);
  for (long i = 1; i < n; ++i) m.at(i, i - 1) = 1;
  for (long i = 0; i < n; ++i) m.at(i, n - 1) = -monic_poly.coeff(i);
  return m;
}

// ---------------------------------------------------------------------------
// Newton identities

namespace {

// Validates l as an L-polynomial of genus g and returns its coefficients a_i
// padded to length 2g + 1.
std::vector<Int> l_coefficients(const IntPoly& l, long g) {
  if (g < 0) throw MalformedPolynomialError("negative genus");
  if (l.degree() != 2 * g) throw MalformedPolynomialError("L-polynomial degree must equal 2g");
  if (l.coeff(0) != 1) throw MalformedPolynomialError("L-polynomial must satisfy L(0) = 1");
  std::vector<Int> a(2 * g + 1, kIntZero);
  for (long i = 0; i <= 2 * g; ++i) a[i] = l.coeff(i);
  return a;
}

}  // namespace

std::vector<Int> power_sums(const IntPoly& l, long g, long count) {
  std::vector<Int> a = l_coefficients(l, g);
  const long deg = 2 * g;
  std::vector<Int> p(count + 1, kIntZero);
  // p_k = -sum_{i=1}^{min(k-1, 2g)} a_i p_{k-i} - [k <= 2g] k a_k.
  for (long k = 1; k <= count; ++k) {
    Int s = 0;
    for (long i = 1; i < k && i <= deg; ++i) s += a[i] * p[k - i];
    if (k <= deg) s += Int(k) * a[k];
    p[k] = -s;
  }
  p.erase(p.begin());
  return p;
}

Int newton_counts(const IntPoly& l, const Int& q, long g, long n) {
  if (n < 1) throw ParameterError("newton_counts: n must be >= 1");
  std::vector<Int> sums = power_sums(l, g, n);
  Int qn;
  mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));
  return qn + 1 - sums[n - 1];
}

IntPoly reconstruct_l_from_counts(const std::vector<Int>& counts, const Int& q, long g) {
  if (g < 0) throw ParameterError("reconstruct_l_from_counts: negative genus");
  if (static_cast<long>(counts.size()) != g)
    throw ParameterError("reconstruct_l_from_counts: exactly g counts required");
  if (g == 0) return IntPoly::constant(1);

  // s_n = q^n + 1 - N_n, then invert Newton's identities for a_1..a_g.
  std::vector<Int> s(g + 1, kIntZero);
  Int qn = 1;
  for (long n = 1; n <= g; ++n) {
    qn *= q;
    s[n] = qn + 1 - counts[n - 1];
  }
  std::vector<Int> a(2 * g + 1, kIntZero);
  a[0] = 1;
  for (long k = 1; k <= g; ++k) {
    Int acc = s[k];
    for (long i = 1; i < k; ++i) acc += a[i] * s[k - i];
    // a_k = -acc / k, which must be integral.
    Int num = -acc, r;
    Int kk(k);
    Int quo;
    mpz_fdiv_qr(quo.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), kk.get_mpz_t());
    if (r != 0)
      throw InconsistentCountsError("reconstruct_l_from_counts: non-integral coefficient");
    a[k] = quo;
  }
  // Functional equation a_{2g-i} = q^{g-i} a_i fills the upper half.
  for (long i = 0; i < g; ++i) {
    Int qpow;
    mpz_pow_ui(qpow.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(g - i));
    a[2 * g - i] = qpow * a[i];
  }
  return IntPoly(std::move(a));
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace gs
