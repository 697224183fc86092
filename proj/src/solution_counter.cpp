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

#include "gsuzuki/solution_counter.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstring>
#include <thread>

namespace gs {

namespace {

// The condition value for a single functional is the quadratic form
//   sigma(x) = (Ux)^T B (Vx)  with  B[r][s] = Tr_abs(lambda * X^r * X^s).
// Writing C = U^T B V and D = C + C^T, a single-digit step x' = x + s e_k
// updates sigma by s * (Dx)_k + C[k][k], and w = Dx itself moves by s times
// the k-th column of D.  A reflected Gray walk therefore maintains (sigma, w)
// with one packed vector addition per visited element; the lowest `leap`
// digits are not walked at all but resolved through a lookup table keyed on
// (sigma, w_0..w_{leap-1}).

using Matrix = std::vector<std::vector<long>>;  // row-major, d x d

Matrix matmul_mod(const Matrix& a, const Matrix& b, long p) {
  const std::size_t n = a.size();
  Matrix r(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      long v = a[i][k];
      if (v == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] = (r[i][j] + v * b[k][j]) % p;
    }
  }
  return r;
}

Matrix transpose(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix r(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[j][i] = a[i][j];
  return r;
}

struct FormMatrices {
  Matrix c;  // U^T B V
  Matrix d;  // C + C^T
};

// Per-form data shared by all worker threads.
struct Setup {
  long p = 0;
  int dim = 0;        // field degree
  int lanes = 0;      // digits enumerated per block (leap + walked)
  int top = 0;        // digits fixed per block
  int leap = 0;       // digits resolved by the lookup table
  int m = 0;          // number of functionals
  std::vector<FormMatrices> forms;
  std::vector<std::uint8_t> lut;  // size (p^(leap+1))^m, counts per state
  std::uint32_t state_stride = 0;  // p^(leap+1)
};

// sigma/w state of one block start (all enumerated digits zero except the
// fixed top digits).
struct BlockState {
  std::array<std::uint32_t, 8> sigma;
  std::array<std::array<std::uint8_t, 64>, 8> w;  // lanes [0, K)
};

BlockState block_state(const Setup& s, const std::vector<long>& top_digits) {
  BlockState st{};
  for (int j = 0; j < s.m; ++j) {
    const Matrix& c = s.forms[j].c;
    const Matrix& d = s.forms[j].d;
    long sigma = 0;
    for (int a = 0; a < s.top; ++a) {
      long xa = top_digits[a];
      if (xa == 0) continue;
      for (int b = 0; b < s.top; ++b) {
        long xb = top_digits[b];
        if (xb == 0) continue;
        sigma = (sigma + xa * c[s.lanes + a][s.lanes + b] % s.p * xb) % s.p;
      }
    }
    st.sigma[j] = static_cast<std::uint32_t>(sigma);
    for (int i = 0; i < s.lanes; ++i) {
      long wi = 0;
      for (int a = 0; a < s.top; ++a) {
        long xa = top_digits[a];
        if (xa != 0) wi = (wi + xa * d[i][s.lanes + a]) % s.p;
      }
      st.w[j][static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(wi);
    }
  }
  return st;
}

// --------------------------------------------------------------------------
// Digit-vector packings.

// Two-bitplane packing for p = 3 (64 lanes per word pair).
struct Plane3Pack {
  struct Word {
    std::uint64_t lo = 0, hi = 0;
  };
  static constexpr long kP = 3;
  static Word pack(const std::uint8_t* v, int n) {
    Word w;
    for (int i = 0; i < n; ++i) {
      w.lo |= static_cast<std::uint64_t>(v[i] == 1) << i;
      w.hi |= static_cast<std::uint64_t>(v[i] == 2) << i;
    }
    return w;
  }
  static Word add(Word a, Word b) {
    Word z;
    z.lo = ((a.lo ^ b.lo) & ~(a.hi | b.hi)) | (a.hi & b.hi);
    z.hi = ((a.hi ^ b.hi) & ~(a.lo | b.lo)) | (a.lo & b.lo);
    return z;
  }
  static std::uint32_t lane(Word w, int k) {
    return static_cast<std::uint32_t>(((w.lo >> k) & 1) + 2 * ((w.hi >> k) & 1));
  }
  // Key of the lowest `leap` lanes; at most 2*leap bits.
  static std::uint32_t low_key(Word w, int leap) {
    const std::uint64_t mask = (1ull << leap) - 1;
    return static_cast<std::uint32_t>((w.lo & mask) | ((w.hi & mask) << leap));
  }
  static int key_bits(int leap) { return 2 * leap; }
  static std::uint32_t key_to_windex(std::uint32_t key, int leap, long /*p*/) {
    std::uint32_t idx = 0, mul = 1;
    for (int i = 0; i < leap; ++i) {
      std::uint32_t digit = ((key >> i) & 1) + 2 * ((key >> (leap + i)) & 1);
      idx += digit * mul;
      mul *= 3;
    }
    return idx;
  }
};

// Nibble packing for p = 5 or 7 (up to 16 lanes in one word).
template <long P>
struct NibblePack {
  using Word = std::uint64_t;
  static constexpr long kP = P;
  static constexpr std::uint64_t kOnes = 0x1111111111111111ull;
  static Word pack(const std::uint8_t* v, int n) {
    Word w = 0;
    for (int i = 0; i < n; ++i) w |= static_cast<std::uint64_t>(v[i]) << (4 * i);
    return w;
  }
  static Word add(Word a, Word b) {
    Word t = a + b;  // lanes stay below 16, no carry between nibbles
    Word over = ((t + (8 - P) * kOnes) & (8 * kOnes)) >> 3;
    return t - over * P;
  }
  static std::uint32_t lane(Word w, int k) {
    return static_cast<std::uint32_t>((w >> (4 * k)) & 0xF);
  }
  static std::uint32_t low_key(Word w, int leap) {
    return static_cast<std::uint32_t>(w & ((1ull << (4 * leap)) - 1));
  }
  static int key_bits(int leap) { return 4 * leap; }
  static std::uint32_t key_to_windex(std::uint32_t key, int leap, long p) {
    std::uint32_t idx = 0, mul = 1;
    for (int i = 0; i < leap; ++i) {
      idx += ((key >> (4 * i)) & 0xF) * mul;
      mul *= static_cast<std::uint32_t>(p);
    }
    return idx;
  }
};

// --------------------------------------------------------------------------
// Lookup table over the lowest `leap` digits.
//
// lut[state] = #{delta in [0,p)^leap : every form value vanishes}, where
// state packs, per form, sigma and the lanes w_0..w_{leap-1}.
std::vector<std::uint8_t> build_leap_lut(const Setup& s) {
  const long p = s.p;
  const int leap = s.leap;
  std::uint32_t per_form = 1;
  for (int i = 0; i <= leap; ++i) per_form *= static_cast<std::uint32_t>(p);
  std::uint64_t total = 1;
  for (int j = 0; j < s.m; ++j) total *= per_form;

  std::uint32_t deltas = 1;
  for (int i = 0; i < leap; ++i) deltas *= static_cast<std::uint32_t>(p);

  std::vector<std::uint8_t> lut(total, 0);
  std::vector<std::uint32_t> sig(s.m), wlow(s.m * leap);
  for (std::uint64_t state = 0; state < total; ++state) {
    std::uint64_t rest = state;
    // Low form index varies fastest.
    for (int j = 0; j < s.m; ++j) {
      std::uint32_t f = static_cast<std::uint32_t>(rest % per_form);
      rest /= per_form;
      std::uint32_t widx = f % deltas;
      sig[j] = f / deltas;
      for (int i = 0; i < leap; ++i) {
        wlow[j * leap + i] = widx % p;
        widx /= p;
      }
    }
    std::uint8_t cnt = 0;
    for (std::uint32_t dv = 0; dv < deltas; ++dv) {
      long digits[8];
      std::uint32_t rest2 = dv;
      for (int i = 0; i < leap; ++i) {
        digits[i] = rest2 % p;
        rest2 /= p;
      }
      bool all_zero = true;
      for (int j = 0; j < s.m && all_zero; ++j) {
        const Matrix& c = s.forms[j].c;
        long v = sig[j];
        for (int i = 0; i < leap; ++i) {
          v += digits[i] * wlow[j * leap + i];
          v += digits[i] * digits[i] % p * c[i][i];
          for (int i2 = i + 1; i2 < leap; ++i2) {
            v += digits[i] * digits[i2] % p * ((c[i][i2] + c[i2][i]) % p);
          }
        }
        if (v % p != 0) all_zero = false;
      }
      if (all_zero) ++cnt;
    }
    lut[state] = cnt;
  }
  return lut;
}

// --------------------------------------------------------------------------
// Packed engine: walks the digits [leap, K) and resolves the rest by LUT.

template <class Pack, int M>
std::uint64_t run_block_packed(const Setup& s, const std::vector<long>& top_digits,
                               const std::vector<typename Pack::Word>& col_delta,
                               const std::vector<std::uint8_t>& diag,
                               const std::vector<std::uint32_t>& windex_map,
                               const std::uint32_t* state_weight,
                               const std::uint8_t* modtbl, const std::uint8_t* negtbl) {
  const long p = s.p;
  const int leap = s.leap;
  const int walked = s.lanes - leap;
  BlockState st = block_state(s, top_digits);

  typename Pack::Word w[M];
  std::uint32_t sigma[M];
  for (int j = 0; j < M; ++j) {
    w[j] = Pack::pack(st.w[j].data(), s.lanes);
    sigma[j] = st.sigma[j];
  }

  const std::uint32_t deltas_per_leap = [&] {
    std::uint32_t v = 1;
    for (int i = 0; i < leap; ++i) v *= static_cast<std::uint32_t>(p);
    return v;
  }();

  const std::vector<std::uint8_t>& lut = s.lut;
  std::uint64_t count = 0;
  auto visit = [&]() {
    std::uint64_t idx = 0;
    for (int j = 0; j < M; ++j) {
      std::uint32_t widx = windex_map[Pack::low_key(w[j], leap)];
      idx += static_cast<std::uint64_t>(sigma[j] * deltas_per_leap + widx) * state_weight[j];
    }
    count += lut[idx];
  };

  std::uint8_t val[64];
  std::uint8_t dirbit[64];  // 0 ascending, 1 descending
  std::uint8_t foc[66];
  for (int i = 0; i < walked; ++i) {
    val[i] = 0;
    dirbit[i] = 0;
    foc[i] = static_cast<std::uint8_t>(i);
  }
  foc[walked] = static_cast<std::uint8_t>(walked);

  visit();
  if (walked == 0) return count;
  for (;;) {
    const int k = foc[0];
    foc[0] = 0;
    if (k == walked) break;
    const int db = dirbit[k];
    val[k] = static_cast<std::uint8_t>(val[k] + (db ? -1 : +1));
    const int lane_idx = k + leap;
    for (int j = 0; j < M; ++j) {
      std::uint32_t wk = Pack::lane(w[j], lane_idx);
      std::uint32_t wk_eff = db ? negtbl[wk] : wk;
      sigma[j] = modtbl[sigma[j] + wk_eff + diag[j * s.lanes + lane_idx]];
      w[j] = Pack::add(w[j], col_delta[(static_cast<std::size_t>(j) * s.lanes + lane_idx) * 2 + db]);
    }
    if (val[k] == 0 || val[k] == p - 1) {
      dirbit[k] ^= 1;
      foc[k] = foc[k + 1];
      foc[k + 1] = static_cast<std::uint8_t>(k + 1);
    }
    visit();
  }
  return count;
}

template <class Pack, int M>
std::uint64_t run_packed(const Setup& s, int threads) {
  // Packed delta columns, both signs, per form and lane.
  std::vector<typename Pack::Word> col_delta(static_cast<std::size_t>(s.m) * s.lanes * 2);
  std::vector<std::uint8_t> diag(static_cast<std::size_t>(s.m) * s.lanes);
  for (int j = 0; j < s.m; ++j) {
    for (int k = 0; k < s.lanes; ++k) {
      std::uint8_t plus[64], minus[64];
      for (int i = 0; i < s.lanes; ++i) {
        long v = s.forms[j].d[i][k] % s.p;
        plus[i] = static_cast<std::uint8_t>(v);
        minus[i] = static_cast<std::uint8_t>((s.p - v) % s.p);
      }
      col_delta[(static_cast<std::size_t>(j) * s.lanes + k) * 2 + 0] = Pack::pack(plus, s.lanes);
      col_delta[(static_cast<std::size_t>(j) * s.lanes + k) * 2 + 1] = Pack::pack(minus, s.lanes);
      diag[static_cast<std::size_t>(j) * s.lanes + k] =
          static_cast<std::uint8_t>(s.forms[j].c[k][k] % s.p);
    }
  }

  std::vector<std::uint32_t> windex_map(1u << Pack::key_bits(s.leap), 0);
  for (std::uint32_t key = 0; key < windex_map.size(); ++key) {
    windex_map[key] = Pack::key_to_windex(key, s.leap, s.p);
  }

  std::uint32_t state_weight[4] = {1, 1, 1, 1};
  for (int j = 1; j < s.m; ++j) state_weight[j] = state_weight[j - 1] * s.state_stride;

  std::uint8_t modtbl[64];
  for (int v = 0; v < 64; ++v) modtbl[v] = static_cast<std::uint8_t>(v % s.p);
  std::uint8_t negtbl[16];
  for (long v = 0; v < 16; ++v) negtbl[v] = static_cast<std::uint8_t>((s.p - v % s.p) % s.p);

  std::uint64_t nblocks = 1;
  for (int i = 0; i < s.top; ++i) nblocks *= static_cast<std::uint64_t>(s.p);

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> total{0};
  auto worker = [&]() {
    std::uint64_t local = 0;
    for (;;) {
      std::uint64_t b = next.fetch_add(1);
      if (b >= nblocks) break;
      std::vector<long> top(s.top);
      std::uint64_t rest = b;
      for (int i = 0; i < s.top; ++i) {
        top[i] = static_cast<long>(rest % s.p);
        rest /= s.p;
      }
      local += run_block_packed<Pack, M>(s, top, col_delta, diag, windex_map, state_weight,
                                         modtbl, negtbl);
    }
    total.fetch_add(local);
  };
  if (threads <= 1 || nblocks <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return total.load();
}

// --------------------------------------------------------------------------
// Generic reference engine: plain Gray walk, no packing, no leap.

std::uint64_t run_generic(const Setup& s, int threads) {
  std::uint64_t nblocks = 1;
  for (int i = 0; i < s.top; ++i) nblocks *= static_cast<std::uint64_t>(s.p);

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> total{0};
  auto worker = [&]() {
    std::uint64_t local = 0;
    const int n = s.lanes;  // generic engine walks every non-top digit
    for (;;) {
      std::uint64_t b = next.fetch_add(1);
      if (b >= nblocks) break;
      std::vector<long> top(s.top);
      std::uint64_t rest = b;
      for (int i = 0; i < s.top; ++i) {
        top[i] = static_cast<long>(rest % s.p);
        rest /= s.p;
      }
      BlockState st = block_state(s, top);
      std::vector<std::uint32_t> sigma(s.m);
      std::vector<std::vector<std::uint32_t>> w(s.m, std::vector<std::uint32_t>(n));
      for (int j = 0; j < s.m; ++j) {
        sigma[j] = st.sigma[j];
        for (int i = 0; i < n; ++i) w[j][i] = st.w[j][static_cast<std::size_t>(i)];
      }
      std::vector<std::uint8_t> val(n, 0), dirbit(n, 0), foc(n + 1);
      for (int i = 0; i <= n; ++i) foc[i] = static_cast<std::uint8_t>(i);

      auto all_zero = [&]() {
        for (int j = 0; j < s.m; ++j) {
          if (sigma[j] != 0) return false;
        }
        return true;
      };
      if (all_zero()) ++local;
      if (n > 0) {
        const long p = s.p;
        for (;;) {
          const int k = foc[0];
          foc[0] = 0;
          if (k == n) break;
          const int db = dirbit[k];
          val[k] = static_cast<std::uint8_t>(val[k] + (db ? -1 : +1));
          for (int j = 0; j < s.m; ++j) {
            std::uint32_t wk = w[j][k];
            std::uint32_t wk_eff = db ? (p - wk) % p : wk;
            sigma[j] =
                (sigma[j] + wk_eff + static_cast<std::uint32_t>(s.forms[j].c[k][k] % p)) % p;
            const std::vector<long>& dmat_row_src = s.forms[j].d[k];
            // add ± column k of D (D symmetric, so row k equals column k)
            if (!db) {
              for (int i = 0; i < n; ++i) {
                std::uint32_t v = w[j][i] + static_cast<std::uint32_t>(dmat_row_src[i]);
                if (v >= static_cast<std::uint32_t>(p)) v -= p;
                w[j][i] = v;
              }
            } else {
              for (int i = 0; i < n; ++i) {
                std::uint32_t sub = static_cast<std::uint32_t>(dmat_row_src[i]);
                std::uint32_t v = w[j][i] + static_cast<std::uint32_t>(p) - sub;
                if (v >= static_cast<std::uint32_t>(p)) v -= p;
                w[j][i] = v;
              }
            }
          }
          if (val[k] == 0 || val[k] == p - 1) {
            dirbit[k] ^= 1;
            foc[k] = foc[k + 1];
            foc[k + 1] = static_cast<std::uint8_t>(k + 1);
          }
          if (all_zero()) ++local;
        }
      }
    }
    total.fetch_add(local);
  };
  if (threads <= 1 || nblocks <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return total.load();
}

}  // namespace

std::vector<std::vector<long>> linear_map_columns(
    const Field& f, const std::function<Element(const Element&)>& map) {
  const int d = f.degree();
  std::vector<std::vector<long>> cols(d);
  for (int j = 0; j < d; ++j) {
    std::vector<long> basis(d, 0);
    basis[j] = 1;
    cols[j] = map(f.element(std::move(basis))).coeffs();
  }
  return cols;
}

std::uint64_t count_trace_zero(const Field& field, const std::vector<std::vector<long>>& u_cols,
                               const std::vector<std::vector<long>>& v_cols,
                               const std::vector<Element>& multipliers,
                               const CounterOptions& options) {
  const long p = field.p();
  const int d = field.degree();
  if (field.order() > options.limit)
    throw ResourceError("count_trace_zero: field exceeds the enumeration limit");
  if (static_cast<int>(u_cols.size()) != d || static_cast<int>(v_cols.size()) != d)
    throw ParameterError("count_trace_zero: matrices must have d columns");
  if (multipliers.empty() || multipliers.size() > 8)
    throw ParameterError("count_trace_zero: between 1 and 8 multipliers supported");
  for (const Element& lam : multipliers) {
    if (lam.field() != field) throw FieldMismatchError("multiplier from a foreign field");
  }

  // phi_j[k] = Tr_abs(lambda_j X^k), so B_j[r][s] = phi_j[r+s].
  const int m = static_cast<int>(multipliers.size());
  std::vector<Element> xpow(2 * d - 1);
  xpow[0] = field.one();
  std::vector<long> xvec(d, 0);
  if (d > 1) {
    xvec[1] = 1;
  } else {
    xvec[0] = (p - field.modulus()[0] % p) % p;  // X = -f_0 in F_p[X]/(X + f_0)
  }
  Element x = field.element(xvec);
  for (int k = 1; k < 2 * d - 1; ++k) xpow[k] = xpow[k - 1] * x;

  Setup s;
  s.p = p;
  s.dim = d;
  s.m = m;
  s.forms.resize(m);
  Matrix u(d, std::vector<long>(d)), v(d, std::vector<long>(d));
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      u[i][j] = u_cols[j][i] % p;
      v[i][j] = v_cols[j][i] % p;
    }
  }
  Matrix ut = transpose(u);
  for (int j = 0; j < m; ++j) {
    std::vector<long> phi(2 * d - 1);
    for (int k = 0; k < 2 * d - 1; ++k) phi[k] = trace_int(multipliers[j] * xpow[k]);
    Matrix b(d, std::vector<long>(d));
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) b[r][c] = phi[r + c];
    Matrix cmat = matmul_mod(matmul_mod(ut, b, p), v, p);
    Matrix dmat = cmat;
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) dmat[r][c] = (cmat[r][c] + cmat[c][r]) % p;
    s.forms[j] = FormMatrices{std::move(cmat), std::move(dmat)};
  }

  int threads = options.threads > 0
                    ? options.threads
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  const bool plane3 = (p == 3 && !options.force_generic && d >= 5 && m <= 4);
  const bool nibble =
      ((p == 5 || p == 7) && !options.force_generic && d >= 4 && d <= 16 && m <= 4);

  // Block split: fix enough top digits for work stealing, keeping at least
  // leap + 1 enumerated digits per block.  The leap shrinks when the lookup
  // table for m functionals would grow past a few MB.
  int leap = 0;
  if (plane3) leap = (m == 1) ? 3 : 2;
  if (nibble) leap = 2;
  while (leap > 1) {
    double lut_size = 1.0;
    for (int j = 0; j < m; ++j) lut_size *= std::pow(static_cast<double>(p), leap + 1);
    if (lut_size <= double(1 << 22)) break;
    --leap;
  }
  int top = 0;
  if (d - leap >= 8) {
    while (top < 7 && int_pow(Int(p), static_cast<unsigned long>(top)) < 96 &&
           d - top - leap >= 4) {
      ++top;
    }
  }
  s.top = top;
  s.lanes = d - top;
  s.leap = leap;
  std::uint32_t stride = 1;
  for (int i = 0; i <= leap; ++i) stride *= static_cast<std::uint32_t>(p);
  s.state_stride = stride;

  if (plane3 || nibble) {
    s.lut = build_leap_lut(s);
    if (p == 3) {
      switch (m) {
        case 1: return run_packed<Plane3Pack, 1>(s, threads);
        case 2: return run_packed<Plane3Pack, 2>(s, threads);
        case 3: return run_packed<Plane3Pack, 3>(s, threads);
        case 4: return run_packed<Plane3Pack, 4>(s, threads);
      }
    } else if (p == 5) {
      switch (m) {
        case 1: return run_packed<NibblePack<5>, 1>(s, threads);
        case 2: return run_packed<NibblePack<5>, 2>(s, threads);
        case 3: return run_packed<NibblePack<5>, 3>(s, threads);
        case 4: return run_packed<NibblePack<5>, 4>(s, threads);
      }
    } else {
      switch (m) {
        case 1: return run_packed<NibblePack<7>, 1>(s, threads);
        case 2: return run_packed<NibblePack<7>, 2>(s, threads);
        case 3: return run_packed<NibblePack<7>, 3>(s, threads);
        case 4: return run_packed<NibblePack<7>, 4>(s, threads);
      }
    }
  }
  return run_generic(s, threads);
}

}  // namespace gs
