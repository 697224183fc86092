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

#include "gsuzuki/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace gs {

namespace {

// Dense polynomials over F_p as ascending coefficient vectors, used only for
// modulus construction; element arithmetic has its own reduction path.
using ModPoly = std::vector<long>;

void mp_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long mod_inverse(long a, long p) {
  long t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    long q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (r != 1) throw DivisionByZeroError("mod_inverse of a non-unit");
  return ((t % p) + p) % p;
}

ModPoly mp_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& f, long p) {
  if (a.empty() || b.empty()) return {};
  std::vector<long> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  // Reduce by the monic f.
  const long df = static_cast<long>(f.size()) - 1;
  for (long i = static_cast<long>(prod.size()) - 1; i >= df; --i) {
    long c = prod[i] % p;
    if (c == 0) continue;
    for (long j = 0; j <= df; ++j) {
      prod[i - df + j] = ((prod[i - df + j] - c * f[j]) % p + p) % p;
    }
  }
  prod.resize(df);
  for (long& c : prod) c = ((c % p) + p) % p;
  mp_trim(prod);
  return prod;
}

ModPoly mp_powmod(ModPoly base, long e, const ModPoly& f, long p) {
  ModPoly result{1};
  while (e > 0) {
    if (e & 1) result = mp_mulmod(result, base, f, p);
    e >>= 1;
    if (e) base = mp_mulmod(base, base, f, p);
  }
  return result;
}

ModPoly mp_sub(ModPoly a, const ModPoly& b, long p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  mp_trim(a);
  return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, long p) {
  while (!b.empty()) {
    // a mod b
    long db = static_cast<long>(b.size()) - 1;
    long inv_lead = mod_inverse(b.back(), p);
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
      long da = static_cast<long>(a.size()) - 1;
      long c = (a.back() * inv_lead) % p;
      for (long j = 0; j <= db; ++j) {
        a[da - db + j] = ((a[da - db + j] - c * b[j]) % p + p) % p;
      }
      mp_trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

ModPoly mp_mod(ModPoly a, const ModPoly& f, long p) {
  const long df = static_cast<long>(f.size()) - 1;
  for (long i = static_cast<long>(a.size()) - 1; i >= df; --i) {
    long c = a[i] % p;
    if (c == 0) continue;
    for (long j = 0; j <= df; ++j) {
      a[i - df + j] = ((a[i - df + j] - c * f[j]) % p + p) % p;
    }
  }
  mp_trim(a);
  return a;
}

// gcd(f, X^{p^i} - X) = 1 for i <= d/2 and f | X^{p^d} - X.
bool is_irreducible(const ModPoly& f, long p, int d) {
  ModPoly x{0, 1};
  ModPoly frob = mp_mod(x, f, p);  // X^{p^i} mod f
  for (int i = 1; i <= d; ++i) {
    frob = mp_powmod(frob, p, f, p);
    if (2 * i <= d) {
      ModPoly g = mp_gcd(f, mp_sub(frob, x, p), p);
      if (static_cast<long>(g.size()) - 1 != 0) return false;
    }
  }
  return mp_mod(mp_sub(frob, x, p), f, p).empty();
}

}  // namespace

struct Field::Rep {
  long p;
  int d;
  std::vector<long> modulus;  // length d+1, monic
  // Frobenius x -> x^p as column vectors: frob_cols[j] = coords of (X^j)^p.
  std::vector<std::vector<long>> frob_cols;
};

namespace {

std::vector<long> apply_columns(const std::vector<std::vector<long>>& cols,
                                const std::vector<long>& v, long p) {
  const std::size_t d = cols.size();
  std::vector<long> out(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    long c = v[j];
    if (c == 0) continue;
    const std::vector<long>& col = cols[j];
    for (std::size_t i = 0; i < d; ++i) out[i] = (out[i] + c * col[i]) % p;
  }
  return out;
}

}  // namespace

Field Field::get(long p, int d) {
  if (p < 3 || !is_prime(p)) throw ParameterError("field characteristic must be an odd prime");
  if (d < 1) throw ParameterError("field degree must be >= 1");
  if (d > 64) throw ParameterError("field degree above the supported bound (64)");

  static std::mutex cache_mutex;
  static std::map<std::pair<long, int>, std::shared_ptr<const Rep>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({p, d});
    if (it != cache.end()) return Field(it->second);
  }

  // Deterministic modulus: lexicographic scan over (a_{d-1}, ..., a_0),
  // which coincides with the integer order of sum a_i p^i.
  auto rep = std::make_shared<Rep>();
  rep->p = p;
  rep->d = d;
  Int bound = int_pow(Int(p), static_cast<unsigned long>(d));
  for (Int v = 0; v < bound; ++v) {
    ModPoly f(d + 1, 0);
    f[d] = 1;
    Int rest = v;
    for (int i = 0; i < d; ++i) {
      Int digit = rest % p;
      f[i] = digit.get_si();
      rest /= p;
    }
    if (is_irreducible(f, p, d)) {
      rep->modulus = f;
      break;
    }
  }
  if (rep->modulus.empty()) throw ConsistencyError("no irreducible modulus found");

  rep->frob_cols.resize(d);
  for (int j = 0; j < d; ++j) {
    ModPoly xj(j + 1, 0);
    xj[j] = 1;
    ModPoly img = mp_powmod(xj, p, rep->modulus, p);
    img.resize(d, 0);
    rep->frob_cols[j] = img;
  }

  std::lock_guard<std::mutex> lock(cache_mutex);
  auto [it, inserted] = cache.emplace(std::make_pair(p, d), rep);
  return Field(it->second);
}

long Field::p() const { return rep_->p; }
int Field::degree() const { return rep_->d; }
const std::vector<long>& Field::modulus() const { return rep_->modulus; }

Int Field::order() const { return int_pow(Int(rep_->p), static_cast<unsigned long>(rep_->d)); }

Element Field::zero() const { return Element(*this, std::vector<long>(rep_->d, 0)); }

Element Field::one() const { return from_int(1); }

Element Field::element(std::vector<long> coeffs) const {
  if (static_cast<int>(coeffs.size()) != rep_->d)
    throw ParameterError("element coefficient vector has wrong length");
  for (long& c : coeffs) c = ((c % rep_->p) + rep_->p) % rep_->p;
  return Element(*this, std::move(coeffs));
}

Element Field::from_int(long value) const {
  std::vector<long> c(rep_->d, 0);
  c[0] = ((value % rep_->p) + rep_->p) % rep_->p;
  return Element(*this, std::move(c));
}

Element Field::from_index(const Int& index) const {
  if (index < 0 || index >= order()) throw ParameterError("element index out of range");
  std::vector<long> c(rep_->d, 0);
  Int rest = index;
  for (int i = 0; i < rep_->d; ++i) {
    Int digit = rest % rep_->p;
    c[i] = digit.get_si();
    rest /= rep_->p;
  }
  return Element(*this, std::move(c));
}

Element::Element(Field f, std::vector<long> coeffs)
    : field_(std::move(f)), coeffs_(std::move(coeffs)) {}

bool Element::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](long c) { return c == 0; });
}

namespace {

void require_same_field(const Element& a, const Element& b) {
  if (a.field() != b.field())
    throw FieldMismatchError("arithmetic between elements of different fields");
}

}  // namespace

Element Element::operator+(const Element& rhs) const {
  require_same_field(*this, rhs);
  const long p = field_.p();
  std::vector<long> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    c[i] = coeffs_[i] + rhs.coeffs_[i];
    if (c[i] >= p) c[i] -= p;
  }
  return Element(field_, std::move(c));
}

Element Element::operator-(const Element& rhs) const {
  require_same_field(*this, rhs);
  const long p = field_.p();
  std::vector<long> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    c[i] = coeffs_[i] - rhs.coeffs_[i];
    if (c[i] < 0) c[i] += p;
  }
  return Element(field_, std::move(c));
}

Element Element::operator-() const {
  const long p = field_.p();
  std::vector<long> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] == 0 ? 0 : p - coeffs_[i];
  return Element(field_, std::move(c));
}

Element Element::operator*(const Element& rhs) const {
  require_same_field(*this, rhs);
  const long p = field_.p();
  const int d = field_.degree();
  const std::vector<long>& f = field_.modulus();
  std::vector<long> prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      prod[i + j] = (prod[i + j] + coeffs_[i] * rhs.coeffs_[j]) % p;
    }
  }
  for (int i = 2 * d - 2; i >= d; --i) {
    long c = prod[i];
    if (c == 0) continue;
    for (int j = 0; j < d; ++j) {
      prod[i - d + j] = ((prod[i - d + j] - c * f[j]) % p + p) % p;
    }
  }
  prod.resize(d);
  return Element(field_, std::move(prod));
}

Element Element::operator/(const Element& rhs) const { return *this * rhs.inv(); }

bool Element::operator==(const Element& rhs) const {
  return field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
}

Element Element::inv() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  // Extended Euclid over F_p[X] against the modulus.
  const long p = field_.p();
  ModPoly r0 = field_.modulus();
  ModPoly r1 = coeffs_;
  mp_trim(r1);
  ModPoly t0, t1{1};
  while (!r1.empty()) {
    // Divide r0 by r1.
    ModPoly q;
    ModPoly rem = r0;
    long db = static_cast<long>(r1.size()) - 1;
    long inv_lead = mod_inverse(r1.back(), p);
    q.assign(std::max<std::size_t>(rem.size() - r1.size() + 1, 1), 0);
    while (static_cast<long>(rem.size()) - 1 >= db && !rem.empty()) {
      long da = static_cast<long>(rem.size()) - 1;
      long c = (rem.back() * inv_lead) % p;
      q[da - db] = c;
      for (long j = 0; j <= db; ++j) {
        rem[da - db + j] = ((rem[da - db + j] - c * r1[j]) % p + p) % p;
      }
      mp_trim(rem);
    }
    // (t0, t1) <- (t1, t0 - q t1)
    ModPoly qt1;
    if (!q.empty() && !t1.empty()) {
      qt1.assign(q.size() + t1.size() - 1, 0);
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (std::size_t j = 0; j < t1.size(); ++j) qt1[i + j] = (qt1[i + j] + q[i] * t1[j]) % p;
      }
    }
    ModPoly new_t = mp_sub(t0, qt1, p);
    t0 = t1;
    t1 = new_t;
    r0 = r1;
    r1 = rem;
  }
  // r0 = gcd is a nonzero constant; scale t0 by its inverse.
  if (r0.size() != 1) throw ConsistencyError("inverse: gcd with the modulus is non-constant");
  long scale = mod_inverse(r0[0], p);
  t0.resize(field_.degree(), 0);
  for (long& c : t0) c = (c * scale) % p;
  return Element(field_, std::move(t0));
}

Element Element::pow(const Int& e) const {
  if (e < 0) return inv().pow(-e);
  Element result = field_.one();
  Element base = *this;
  const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (mp_bitcnt_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
    if (i + 1 < bits) base = base * base;
  }
  return result;
}

Element Element::frobenius(long k) const {
  const int d = field_.degree();
  k %= d;
  if (k < 0) k += d;
  std::vector<long> v = coeffs_;
  for (long i = 0; i < k; ++i) v = apply_columns(field_.rep()->frob_cols, v, field_.p());
  return Element(field_, std::move(v));
}

Int Element::index() const {
  Int idx = 0;
  for (long i = static_cast<long>(coeffs_.size()) - 1; i >= 0; --i) {
    idx = idx * field_.p() + coeffs_[i];
  }
  return idx;
}

Element trace(const Element& e, int sub_degree) {
  const int d = e.field().degree();
  if (sub_degree < 1 || d % sub_degree != 0)
    throw ParameterError("trace: sub_degree must divide the field degree");
  Element acc = e;
  Element cur = e;
  for (int i = 1; i < d / sub_degree; ++i) {
    cur = cur.frobenius(sub_degree);
    acc = acc + cur;
  }
  return acc;
}

long trace_int(const Element& e) {
  Element t = trace(e, 1);
  return t.coeffs()[0];
}

Element norm_absolute(const Element& e) {
  if (e.is_zero()) return e.field().zero();
  const Field& f = e.field();
  Int exp = (f.order() - 1) / (f.p() - 1);
  return e.pow(exp);
}

long norm_int(const Element& e) {
  Element n = norm_absolute(e);
  return n.coeffs()[0];
}

int legendre(const Int& k, long p) {
  if (p < 3 || !is_prime(p)) throw ParameterError("legendre: p must be an odd prime");
  Int r = k % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  long a = r.get_si();
  // Euler's criterion via square-and-multiply mod p.
  long result = 1, base = a % p, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = (result * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

Int artin_schreier_fiber_count(const Element& c, int r) {
  const int d = c.field().degree();
  if (r < 1 || d % r != 0)
    throw ParameterError("artin_schreier_fiber_count: r must divide the field degree");
  Element t = trace(c, r);
  if (!t.is_zero()) return 0;
  return int_pow(Int(c.field().p()), static_cast<unsigned long>(r));
}

std::optional<Element> solve_artin_schreier(const Element& c, int r) {
  const Field& f = c.field();
  const int d = f.degree();
  const long p = f.p();
  if (r < 1 || d % r != 0)
    throw ParameterError("solve_artin_schreier: r must divide the field degree");
  // Columns of (Frobenius^r - id) plus the right-hand side, then eliminate.
  std::vector<std::vector<long>> aug(d, std::vector<long>(d + 1, 0));
  for (int j = 0; j < d; ++j) {
    std::vector<long> basis(d, 0);
    basis[j] = 1;
    Element bj = f.element(basis);
    Element img = bj.frobenius(r) - bj;
    for (int i = 0; i < d; ++i) aug[i][j] = img.coeffs()[i];
  }
  for (int i = 0; i < d; ++i) aug[i][d] = c.coeffs()[i];

  std::vector<int> pivot_col(d, -1);
  int row = 0;
  for (int col = 0; col < d && row < d; ++col) {
    int sel = -1;
    for (int i = row; i < d; ++i) {
      if (aug[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(aug[sel], aug[row]);
    long inv = mod_inverse(aug[row][col], p);
    for (int j = col; j <= d; ++j) aug[row][j] = (aug[row][j] * inv) % p;
    for (int i = 0; i < d; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      long factor = aug[i][col];
      for (int j = col; j <= d; ++j) {
        aug[i][j] = ((aug[i][j] - factor * aug[row][j]) % p + p) % p;
      }
    }
    pivot_col[row] = col;
    ++row;
  }
  for (int i = row; i < d; ++i) {
    if (aug[i][d] != 0) return std::nullopt;
  }
  std::vector<long> y(d, 0);
  for (int i = 0; i < row; ++i) y[pivot_col[i]] = aug[i][d];
  return f.element(std::move(y));
}

std::vector<Element> subfield_basis(const Field& f, int r) {
  const int d = f.degree();
  const long p = f.p();
  if (r < 1 || d % r != 0) throw ParameterError("subfield_basis: r must divide the field degree");
  // Kernel of Frobenius^r - id via reduced echelon form.
  std::vector<std::vector<long>> m(d, std::vector<long>(d, 0));
  for (int j = 0; j < d; ++j) {
    std::vector<long> basis(d, 0);
    basis[j] = 1;
    Element bj = f.element(basis);
    Element img = bj.frobenius(r) - bj;
    for (int i = 0; i < d; ++i) m[i][j] = img.coeffs()[i];
  }
  std::vector<int> pivot_of_col(d, -1);
  int row = 0;
  for (int col = 0; col < d && row < d; ++col) {
    int sel = -1;
    for (int i = row; i < d; ++i) {
      if (m[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[sel], m[row]);
    long inv = mod_inverse(m[row][col], p);
    for (int j = col; j < d; ++j) m[row][j] = (m[row][j] * inv) % p;
    for (int i = 0; i < d; ++i) {
      if (i == row || m[i][col] == 0) continue;
      long factor = m[i][col];
      for (int j = col; j < d; ++j) m[i][j] = ((m[i][j] - factor * m[row][j]) % p + p) % p;
    }
    pivot_of_col[col] = row;
    ++row;
  }
  std::vector<Element> basis;
  for (int col = 0; col < d; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<long> v(d, 0);
    v[col] = 1;
    for (int c2 = 0; c2 < col; ++c2) {
      int pr = pivot_of_col[c2];
      if (pr >= 0 && m[pr][col] != 0) v[c2] = (p - m[pr][col]) % p;
    }
    basis.push_back(f.element(std::move(v)));
  }
  if (static_cast<int>(basis.size()) != r)
    throw ConsistencyError("subfield_basis: unexpected kernel dimension");
  return basis;
}

Embedding::Embedding(const Field& from, const Field& to) : from_(from), to_(to) {
  if (from.p() != to.p()) throw FieldMismatchError("embedding requires equal characteristic");
  const int m = from.degree();
  if (to.degree() % m != 0)
    throw FieldMismatchError("embedding requires the source degree to divide the target degree");
  if (from == to) {
    root_powers_.clear();
    return;
  }
  Int subfield_size = int_pow(Int(from.p()), static_cast<unsigned long>(m));
  if (subfield_size > 1000000)
    throw ResourceError("embedding: subfield too large for root enumeration");

  // Roots of the source modulus live in the degree-m subfield of the target;
  // scan that subfield in enumeration-index order and keep the first root.
  std::vector<Element> basis = subfield_basis(to, m);
  std::optional<Element> best;
  Int best_index = 0;
  const long count = subfield_size.get_si();
  for (long v = 0; v < count; ++v) {
    Element cand = to.zero();
    long rest = v;
    for (int i = 0; i < m; ++i) {
      long digit = rest % from.p();
      rest /= from.p();
      if (digit != 0) cand = cand + basis[i] * to.from_int(digit);
    }
    // Evaluate the source modulus at cand.
    Element acc = to.zero();
    const std::vector<long>& f = from.modulus();
    for (long i = static_cast<long>(f.size()) - 1; i >= 0; --i) {
      acc = acc * cand + to.from_int(f[i]);
    }
    if (acc.is_zero()) {
      Int idx = cand.index();
      if (!best || idx < best_index) {
        best = cand;
        best_index = idx;
      }
    }
  }
  if (!best) throw ConsistencyError("embedding: source modulus has no root in the target");
  root_powers_.resize(m);
  root_powers_[0] = to.one();
  for (int i = 1; i < m; ++i) root_powers_[i] = root_powers_[i - 1] * *best;
}

Element Embedding::operator()(const Element& e) const {
  if (e.field() != from_) throw FieldMismatchError("embedding applied to a foreign element");
  if (root_powers_.empty()) return e;  // identity embedding
  Element acc = to_.zero();
  for (std::size_t i = 0; i < e.coeffs().size(); ++i) {
    long c = e.coeffs()[i];
    if (c != 0) acc = acc + root_powers_[i] * to_.from_int(c);
  }
  return acc;
}

const Embedding& canonical_embedding(const Field& from, const Field& to) {
  static std::mutex cache_mutex;
  static std::map<std::pair<const void*, const void*>, std::unique_ptr<Embedding>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_pair(static_cast<const void*>(from.rep()), static_cast<const void*>(to.rep()));
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<Embedding>(from, to)).first;
  }
  return *it->second;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

}  // namespace gs
