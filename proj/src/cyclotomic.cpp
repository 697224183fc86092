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

#include "gsuzuki/cyclotomic.hpp"

#include "gsuzuki/finite_field.hpp"

namespace gs {

namespace {

void check_odd_prime(long p) {
  if (p < 3 || !is_prime(p)) throw ParameterError("cyclotomic: p must be an odd prime");
}

// Folds raw coefficients of zeta^0..zeta^(p-1) into the power basis using
// zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
std::vector<Rat> fold(long p, std::vector<Rat> raw) {
  std::vector<Rat> out(p - 1, Rat(0));
  for (long e = 0; e < static_cast<long>(raw.size()); ++e) {
    if (raw[e] == 0) continue;
    long r = e % p;
    if (r < p - 1) {
      out[r] += raw[e];
    } else {
      for (long i = 0; i < p - 1; ++i) out[i] -= raw[e];
    }
  }
  return out;
}

}  // namespace

CycloElement::CycloElement(long p) : p_(p), coords_(p - 1, Rat(0)) { check_odd_prime(p); }

CycloElement::CycloElement(long p, std::vector<Rat> coords) : p_(p), coords_(std::move(coords)) {
  check_odd_prime(p);
  if (static_cast<long>(coords_.size()) != p - 1)
    throw ParameterError("CycloElement: coordinate vector must have length p-1");
  for (Rat& c : coords_) c.canonicalize();
}

CycloElement CycloElement::zeta_power(long p, long k) {
  check_odd_prime(p);
  long r = ((k % p) + p) % p;
  std::vector<Rat> raw(p, Rat(0));
  raw[r] = 1;
  return CycloElement(p, fold(p, std::move(raw)));
}

CycloElement CycloElement::from_rational(long p, const Rat& r) {
  CycloElement e(p);
  e.coords_[0] = r;
  return e;
}

bool CycloElement::is_zero() const {
  for (const Rat& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

Rat CycloElement::rational_value() const {
  if (!is_rational()) throw ConsistencyError("CycloElement: value is not rational");
  return coords_[0];
}

CycloElement CycloElement::operator+(const CycloElement& rhs) const {
  if (p_ != rhs.p_) throw ParameterError("CycloElement: mixed p");
  std::vector<Rat> v(coords_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coords_[i] + rhs.coords_[i];
  return CycloElement(p_, std::move(v));
}

CycloElement CycloElement::operator-(const CycloElement& rhs) const {
  if (p_ != rhs.p_) throw ParameterError("CycloElement: mixed p");
  std::vector<Rat> v(coords_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coords_[i] - rhs.coords_[i];
  return CycloElement(p_, std::move(v));
}

CycloElement CycloElement::operator-() const {
  std::vector<Rat> v(coords_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coords_[i];
  return CycloElement(p_, std::move(v));
}

CycloElement CycloElement::operator*(const CycloElement& rhs) const {
  if (p_ != rhs.p_) throw ParameterError("CycloElement: mixed p");
  std::vector<Rat> raw(2 * p_ - 3, Rat(0));
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coords_.size(); ++j) {
      raw[i + j] += coords_[i] * rhs.coords_[j];
    }
  }
  return CycloElement(p_, fold(p_, std::move(raw)));
}

CycloElement CycloElement::operator*(const Rat& scalar) const {
  std::vector<Rat> v(coords_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coords_[i] * scalar;
  return CycloElement(p_, std::move(v));
}

bool CycloElement::operator==(const CycloElement& rhs) const {
  return p_ == rhs.p_ && coords_ == rhs.coords_;
}

CycloElement gauss_sum(long p) {
  check_odd_prime(p);
  std::vector<Rat> raw(p, Rat(0));
  for (long j = 1; j < p; ++j) raw[j] = legendre(Int(j), p);
  CycloElement g(p, fold(p, std::move(raw)));
  CycloElement square = g * g;
  Rat expected = Rat(legendre(Int(-1), p)) * Rat(p);
  if (!square.is_rational() || square.rational_value() != expected)
    throw ConsistencyError("gauss_sum: G^2 != eta(-1) p");
  return g;
}

CycloElement galois_apply(long i, const CycloElement& e) {
  const long p = e.p();
  long r = ((i % p) + p) % p;
  if (r == 0) throw ParameterError("galois_apply: i must be coprime to p");
  std::vector<Rat> raw(p, Rat(0));
  for (std::size_t j = 0; j < e.coords().size(); ++j) {
    if (e.coords()[j] == 0) continue;
    raw[(r * static_cast<long>(j)) % p] += e.coords()[j];
  }
  return CycloElement(p, fold(p, std::move(raw)));
}

IntPoly cyclotomic_prime(long p) {
  check_odd_prime(p);
  std::vector<Int> v(p, 1);
  return IntPoly(std::move(v));
}

RatPoly minimal_poly_mp(long p) {
  check_odd_prime(p);
  const int eta_minus1 = legendre(Int(-1), p);
  // 1/ptilde^(1/2) = eta(-1) G / p since G = ptilde^(1/2) and G^2 = eta(-1) p.
  CycloElement g = gauss_sum(p);
  CycloElement alpha =
      (CycloElement::zeta_power(p, 1) * g) * Rat(-eta_minus1, p);

  // Multiplication-by-alpha matrix over the power basis.
  const long n = p - 1;
  RatMat m(n, n);
  for (long j = 0; j < n; ++j) {
    CycloElement img = alpha * CycloElement::zeta_power(p, j);
    for (long i = 0; i < n; ++i) m.at(i, j) = img.coords()[i];
  }
  RatPoly mp = charpoly(m);

  if (mp.degree() != n) throw ConsistencyError("minimal_poly_mp: wrong degree");
  if (!mp.is_squarefree())
    throw ConsistencyError("minimal_poly_mp: characteristic polynomial is not squarefree");
  Int scale = int_pow(Int(p), static_cast<unsigned long>((p - 1) / 2));
  IntPoly scaled = mp.to_int_poly_scaled(scale);  // throws if non-integral
  if (scaled.coeff(0) != 1)
    throw ConsistencyError("minimal_poly_mp: scaled constant term is not 1");
  if (scaled.coeff(1) <= 0)
    throw ConsistencyError("minimal_poly_mp: scaled linear coefficient is not positive");
  return mp;
}

IntPoly scaled_mp(long p) {
  RatPoly mp = minimal_poly_mp(p);
  Int scale = int_pow(Int(p), static_cast<unsigned long>((p - 1) / 2));
  return mp.to_int_poly_scaled(scale);
}

bool verify_mp_factorization(long p) {
  IntPoly s = scaled_mp(p);
  // p^(p-1) M_p(T) M_p(-T) = S(T) S(-T).
  IntPoly lhs = s * s.compose_scaled(Int(-1));
  const int eta_minus1 = legendre(Int(-1), p);
  IntPoly rhs = cyclotomic_prime(p).compose_scaled(Int(eta_minus1) * p).substitute_power(2);
  return lhs == rhs;
}

CycloElement eval_at(const RatPoly& poly, const CycloElement& x) {
  CycloElement acc(x.p());
  for (long i = poly.degree(); i >= 0; --i) {
    acc = acc * x + CycloElement::from_rational(x.p(), poly.coeff(i));
  }
  return acc;
}

}  // namespace gs
