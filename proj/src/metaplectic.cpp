// Copyright 2026 The qcong Authors
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

#include "qcong/metaplectic.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "qcong/error.hpp"
#include "qcong/theory.hpp"

namespace qcong {

namespace {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

void require_prime(int64_t p) {
  if (p < 5 || !is_prime(p)) throw Error(Errc::BadPrime, "need a prime p >= 5, got " + std::to_string(p));
}

int64_t inv_mod(int64_t a, int64_t m) {
  int64_t g = m, x = 0, x1 = 1, r = mod_floor(a, m);
  while (r != 0) {
    const int64_t q = g / r;
    std::tie(g, r) = std::pair{r, g - q * r};
    std::tie(x, x1) = std::pair{x1, x - q * x1};
  }
  if (g != 1) throw Error(Errc::NotCoprime, std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return mod_floor(x, m);
}

}  // namespace

// ---------------------------------------------------------------------------
// SL(2, Z_m)

SL2 SL2::make(int64_t a, int64_t b, int64_t c, int64_t d, int64_t m) {
  if (m < 2) throw Error(Errc::InvalidArgument, "modulus must be >= 2");
  SL2 g{mod_floor(a, m), mod_floor(b, m), mod_floor(c, m), mod_floor(d, m), m};
  if (mod_floor(g.a * g.d - g.b * g.c, m) != 1 % m) throw Error(Errc::InvalidArgument, "determinant is not 1: " + g.to_string());
  return g;
}

SL2 SL2::U(int64_t n, int64_t m) { return make(inv_mod(n, m), 0, 0, n, m); }

SL2 SL2::operator*(const SL2& o) const {
  if (m != o.m) throw Error(Errc::InvalidArgument, "moduli differ");
  return make(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d, m);
}

std::string SL2::to_string() const {
  std::ostringstream out;
  out << "[[" << a << "," << b << "],[" << c << "," << d << "]] mod " << m;
  return out.str();
}

std::string word_to_string(const Word& w) {
  std::string out;
  for (Gen g : w) {
    if (!out.empty()) out += " ";
    out += g == Gen::S ? "S" : (g == Gen::T ? "T" : "T^-1");
  }
  return out;
}

SL2 word_matrix(const Word& w, int64_t m) {
  SL2 g = SL2::identity(m);
  const SL2 tinv = SL2::make(1, 0, -1, 1, m);
  for (Gen x : w) g = g * (x == Gen::S ? SL2::S(m) : (x == Gen::T ? SL2::T(m) : tinv));
  return g;
}

namespace {

void push_t_power(Word& w, int64_t k, int64_t m) {
  k = mod_floor(k, m);
  if (k > m / 2) k -= m;
  for (int64_t i = 0; i < (k < 0 ? -k : k); ++i) w.push_back(k > 0 ? Gen::T : Gen::TInv);
}

void push_s_inverse(Word& w) { w.insert(w.end(), 3, Gen::S); }

// upper shear [[1,k],[0,1]] = S T^{-k} S^{-1}
void push_upper(Word& w, int64_t k, int64_t m) {
  if (mod_floor(k, m) == 0) return;
  w.push_back(Gen::S);
  push_t_power(w, -k, m);
  push_s_inverse(w);
}

// diag(u, 1/u) = R(u) L(-1/u) R(u) S^{-1}
void push_diag(Word& w, int64_t u, int64_t m) {
  if (mod_floor(u, m) == 1) return;
  push_upper(w, u, m);
  push_t_power(w, -inv_mod(u, m), m);
  push_upper(w, u, m);
  push_s_inverse(w);
}

// S^4 = 1 and T^m = 1; merge runs until nothing changes.
Word collapse(const Word& w, int64_t m) {
  Word cur = w;
  for (bool changed = true; changed;) {
    changed = false;
    Word out;
    for (size_t i = 0; i < cur.size();) {
      size_t j = i;
      if (cur[i] == Gen::S) {
        while (j < cur.size() && cur[j] == Gen::S) ++j;
        out.insert(out.end(), (j - i) % 4, Gen::S);
      } else {
        int64_t net = 0;
        while (j < cur.size() && cur[j] != Gen::S) net += cur[j++] == Gen::T ? 1 : -1;
        push_t_power(out, net, m);
      }
      i = j;
    }
    changed = out != cur;
    cur = std::move(out);
  }
  return cur;
}

}  // namespace

Word sl2_decompose(const SL2& g) {
  const int64_t m = g.m;
  Word w;
  SL2 h = g;
  if (h.a == 0) {
    w.push_back(Gen::S);
    h = SL2::make(0, -1, 1, 0, m) * h;
  }
  const int64_t ainv = inv_mod(h.a, m);
  push_t_power(w, h.c * ainv, m);
  push_diag(w, h.a, m);
  push_upper(w, h.b * ainv, m);
  return collapse(w, m);
}

// ---------------------------------------------------------------------------
// Matrices

RepMatrix::RepMatrix(size_t n, int64_t root_order, Basis basis)
    : n_(n), N_(root_order), basis_(basis), entries_(n * n, CycNum::zero(root_order)) {}

RepMatrix RepMatrix::identity(size_t n, int64_t root_order, Basis basis) {
  RepMatrix out(n, root_order, basis);
  for (size_t i = 0; i < n; ++i) out.at(i, i) = CycNum::one(root_order);
  return out;
}

RepMatrix RepMatrix::operator*(const RepMatrix& o) const {
  if (n_ != o.n_ || N_ != o.N_) throw Error(Errc::InvalidArgument, "matrix shapes differ");
  RepMatrix out(n_, N_, basis_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t k = 0; k < n_; ++k) {
      const CycNum& x = at(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < n_; ++j)
        if (!o.at(k, j).is_zero()) out.at(i, j) += x * o.at(k, j);
    }
  return out;
}

RepMatrix RepMatrix::scaled(const CycNum& s) const {
  RepMatrix out = *this;
  for (auto& e : out.entries_) e = e * s;
  return out;
}

bool RepMatrix::same_entries(const RepMatrix& o) const { return n_ == o.n_ && entries_ == o.entries_; }

bool RepMatrix::is_signed_permutation() const {
  const CycNum one = CycNum::one(N_), minus = -one;
  std::vector<int> col_hits(n_, 0);
  for (size_t i = 0; i < n_; ++i) {
    int row_hits = 0;
    for (size_t j = 0; j < n_; ++j) {
      const CycNum& e = at(i, j);
      if (e.is_zero()) continue;
      if (e != one && e != minus) return false;
      ++row_hits;
      ++col_hits[j];
    }
    if (row_hits != 1) return false;
  }
  return std::all_of(col_hits.begin(), col_hits.end(), [](int c) { return c == 1; });
}

// ---------------------------------------------------------------------------
// The metaplectic representation

int64_t legendre(int64_t n, int64_t p) {
  n = mod_floor(n, p);
  if (n == 0) return 0;
  int64_t result = 1, base = n, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

namespace {

// (-i)^d / sqrt(p)
CycNum s_prefactor(int64_t p) {
  const int64_t N = 4 * p, d = (p - 1) / 2;
  return (CycNum::zeta(N, -p * d) * sqrt_odd(p, N)).divided_by_base_power(BigInt(p), 1);
}

RepMatrix apply_s(int64_t p, const RepMatrix& M) {
  const int64_t N = 4 * p;
  const size_t n = M.size();
  const auto ring = CyclotomicRing::get(N);
  int64_t E = 0;
  for (size_t y = 0; y < n; ++y)
    for (size_t z = 0; z < n; ++z) E = std::max(E, M.at(y, z).denom_exp());
  // lift every entry to a common denominator p^E
  std::vector<std::vector<BigInt>> lifted(n * n);
  BigInt pp = p;
  for (size_t y = 0; y < n; ++y)
    for (size_t z = 0; z < n; ++z) {
      const CycNum& e = M.at(y, z);
      std::vector<BigInt> c = e.coeffs();
      if (e.denom_exp() < E) {
        BigInt scale;
        mpz_pow_ui(scale.get_mpz_t(), pp.get_mpz_t(), static_cast<unsigned long>(E - e.denom_exp()));
        for (auto& v : c) v *= scale;
      }
      lifted[y * n + z] = std::move(c);
    }
  const CycNum pre = s_prefactor(p);
  RepMatrix out(n, N, M.basis());
  std::vector<BigInt> buf;
  for (size_t x = 0; x < n; ++x)
    for (size_t z = 0; z < n; ++z) {
      buf.assign(N, BigInt(0));
      for (size_t y = 0; y < n; ++y) {
        const auto& c = lifted[y * n + z];
        const int64_t shift = (4 * static_cast<int64_t>(x * y)) % N;
        for (size_t k = 0; k < c.size(); ++k) {
          if (c[k] == 0) continue;
          const size_t idx = (k + shift) % N;
          mpz_add(buf[idx].get_mpz_t(), buf[idx].get_mpz_t(), c[k].get_mpz_t());
        }
      }
      out.at(x, z) = CycNum::from_coeffs(N, buf, E, pp) * pre;
    }
  return out;
}

RepMatrix apply_t_power(int64_t p, int64_t k, const RepMatrix& M) {
  const int64_t d = (p - 1) / 2;
  RepMatrix out = M;
  for (int64_t x = 1; x < p; ++x)
    for (int64_t z = 0; z < p; ++z) out.at(x, z) = M.at(x, z).times_zeta(k * 4 * d * (x * x % p));
  return out;
}

}  // namespace

RepMatrix apply_gen(int64_t p, Gen g, const RepMatrix& M) {
  if (static_cast<int64_t>(M.size()) != p || M.root_order() != 4 * p) {
    throw Error(Errc::InvalidArgument, "matrix is not on C[Z_p]");
  }
  if (g == Gen::S) return apply_s(p, M);
  return apply_t_power(p, g == Gen::T ? 1 : -1, M);
}

RepMatrix w_gen(int64_t p, WGen gen, int64_t n) {
  require_prime(p);
  const int64_t N = 4 * p, d = (p - 1) / 2;
  RepMatrix out(p, N, Basis::Delta);
  switch (gen) {
    case WGen::S: {
      const CycNum pre = s_prefactor(p);
      for (int64_t x = 0; x < p; ++x)
        for (int64_t y = 0; y < p; ++y) out.at(x, y) = pre.times_zeta(4 * (x * y % p));
      break;
    }
    case WGen::T:
      for (int64_t x = 0; x < p; ++x) out.at(x, x) = CycNum::zeta(N, 4 * d * (x * x % p));
      break;
    case WGen::U: {
      const int64_t ls = legendre(n, p);
      if (ls == 0) throw Error(Errc::NotCoprime, "U(n) needs n prime to p");
      for (int64_t x = 0; x < p; ++x) out.at(x, mod_floor(n * x, p)) = CycNum::integer(N, ls);
      break;
    }
  }
  return out;
}

namespace {

// W(S)^2 = (-1)^d times f(x) -> f(-x).
RepMatrix apply_s_squared(int64_t p, const RepMatrix& M) {
  const bool flip = ((p - 1) / 2) % 2 == 1;
  RepMatrix out(M.size(), M.root_order(), M.basis());
  for (int64_t x = 0; x < p; ++x)
    for (int64_t z = 0; z < p; ++z) {
      const CycNum& e = M.at(mod_floor(-x, p), z);
      out.at(x, z) = flip ? -e : e;
    }
  return out;
}

}  // namespace

RepMatrix w_word(int64_t p, const Word& w) {
  require_prime(p);
  RepMatrix out = RepMatrix::identity(p, 4 * p, Basis::Delta);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it != Gen::S) {
      int64_t k = 0;
      for (; it != w.rend() && *it != Gen::S; ++it) k += *it == Gen::T ? 1 : -1;
      --it;
      out = apply_t_power(p, k, out);
    } else if (std::next(it) != w.rend() && *std::next(it) == Gen::S) {
      out = apply_s_squared(p, out);
      ++it;
    } else {
      out = apply_gen(p, Gen::S, out);
    }
  }
  return out;
}

RepMatrix w_of(int64_t p, const SL2& g) {
  if (g.m != p) throw Error(Errc::InvalidArgument, "element is not in SL(2, Z_p)");
  return w_word(p, sl2_decompose(g));
}

RepMatrix odd_part(const RepMatrix& M) {
  const int64_t p = static_cast<int64_t>(M.size());
  if (p < 3 || p % 2 == 0) throw Error(Errc::InvalidArgument, "odd part needs odd size");
  for (int64_t y = 0; y < p; ++y)
    for (int64_t x = 0; x < p; ++x)
      if (M.at(mod_floor(-y, p), mod_floor(-x, p)) != M.at(y, x)) {
        throw Error(Errc::NotParityEquivariant, "entry (" + std::to_string(y) + "," + std::to_string(x) + ")");
      }
  const int64_t d = (p - 1) / 2;
  RepMatrix out(d, M.root_order(), Basis::OddDelta);
  for (int64_t y = 1; y <= d; ++y)
    for (int64_t x = 1; x <= d; ++x) out.at(y - 1, x - 1) = M.at(y, x) - M.at(y, p - x);
  return out;
}

RepMatrix tqft_torus(int64_t p, TorusGen gen) {
  require_prime(p);
  const Theory T = Theory::so3(p);
  const int64_t d = T.d();
  RepMatrix out(d, T.root_order(), Basis::TqftB);
  for (int64_t i = 1; i <= d; ++i) {
    if (gen == TorusGen::T) {
      const int sign = ((i * i - 1) % 2 == 0) ? 1 : -1;
      const CycNum z = CycNum::zeta(T.root_order(), T.A_exp() * (i * i - 1));
      out.at(i - 1, i - 1) = sign > 0 ? z : -z;
    } else {
      for (int64_t j = 1; j <= d; ++j) out.at(j - 1, i - 1) = T.eta() * T.qint(i * j);
    }
  }
  return out;
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

namespace {

std::optional<int64_t> kappa_power(const Theory& T, const CycNum& x) {
  CycNum k = CycNum::one(T.root_order());
  for (int64_t m = 0; m < T.kappa_order(); ++m) {
    if (k == x) return m;
    k = k * T.kappa();
  }
  return std::nullopt;
}

void fail(MetaplecticReport& rep, std::string why) {
  if (rep.status != CheckStatus::Fail) rep.counterexample = std::move(why);
  rep.status = CheckStatus::Fail;
}

}  // namespace

MetaplecticReport verify_factor(int64_t p) {
  MetaplecticReport rep{"factor", p, CheckStatus::Pass, std::nullopt, std::nullopt, {}};
  if (p == 3) {
    rep.status = CheckStatus::Skipped;
    rep.details.push_back("p = 3: the correction factors are not powers of kappa");
    return rep;
  }
  require_prime(p);
  const Theory T = Theory::so3(p);
  const int64_t N = T.root_order(), d = T.d();
  const CycNum s_fix = CycNum::zeta(N, -p * (d - 1));  // (-i)^{d-1}
  const CycNum t_fix = T.q().pow(d);
  if (!tqft_torus(p, TorusGen::S).scaled(s_fix).same_entries(odd_part(w_gen(p, WGen::S)))) {
    fail(rep, "(-i)^(d-1) Z(S) != W_odd(S)");
  }
  if (!tqft_torus(p, TorusGen::T).scaled(t_fix).same_entries(odd_part(w_gen(p, WGen::T)))) {
    fail(rep, "q^d Z(T) != W_odd(T)");
  }
  for (const auto& [name, fix] : {std::pair{"(-i)^(d-1)", s_fix}, std::pair{"q^d", t_fix}}) {
    if (auto m = kappa_power(T, fix)) {
      rep.details.push_back(std::string(name) + " = kappa^" + std::to_string(*m));
    } else {
      fail(rep, std::string(name) + " is not a power of kappa");
    }
  }
  return rep;
}

MetaplecticReport verify_congruence_property(int64_t p) {
  require_prime(p);
  MetaplecticReport rep{"congruence", p, CheckStatus::Pass, std::nullopt, std::nullopt, {}};
  const int64_t d = (p - 1) / 2;
  for (int64_t n = 1; n < p; ++n) {
    const RepMatrix odd = odd_part(w_of(p, SL2::U(n, p)));
    if (!odd.is_signed_permutation()) {
      fail(rep, "U(" + std::to_string(n) + ") is not a signed permutation");
      continue;
    }
    const int64_t ninv = inv_mod(n, p);
    std::ostringstream perm;
    perm << "n=" << n << ":";
    for (int64_t x = 1; x <= d; ++x) {
      for (int64_t y = 1; y <= d; ++y) {
        const CycNum& e = odd.at(y - 1, x - 1);
        if (e.is_zero()) continue;
        perm << " " << x << "->" << (e == CycNum::one(odd.root_order()) ? "+" : "-") << y;
        const int64_t target = mod_floor(ninv * x, p);
        if (y != target && y != p - target) fail(rep, "U(" + std::to_string(n) + ") moves " + std::to_string(x) + " off +-n^-1 x");
      }
    }
    rep.details.push_back(perm.str());
  }
  return rep;
}

MetaplecticReport verify_homomorphism(int64_t p, uint64_t seed, int pairs) {
  require_prime(p);
  MetaplecticReport rep{"homomorphism", p, CheckStatus::Pass, std::nullopt, std::nullopt, {}};
  rep.seed = seed;
  const RepMatrix id = RepMatrix::identity(p, 4 * p, Basis::Delta);
  const RepMatrix s = w_gen(p, WGen::S), t = w_gen(p, WGen::T);
  if (!(s * s * s * s).same_entries(id)) fail(rep, "W(S)^4 != 1");
  const RepMatrix st = s * t;
  if (!(st * st * st).same_entries(s * s)) fail(rep, "(W(S)W(T))^3 != W(S)^2");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> coord(0, p - 1);
  auto random_sl2 = [&] {
    for (;;) {
      const int64_t a = coord(rng), b = coord(rng), c = coord(rng), d = coord(rng);
      if (mod_floor(a * d - b * c, p) == 1) return SL2::make(a, b, c, d, p);
    }
  };
  for (int k = 0; k < pairs; ++k) {
    const SL2 g = random_sl2(), h = random_sl2();
    Word joined = sl2_decompose(g);
    const Word wh = sl2_decompose(h);
    joined.insert(joined.end(), wh.begin(), wh.end());
    if (!w_word(p, joined).same_entries(w_of(p, g * h))) {
      fail(rep, "W(g)W(h) != W(gh) for g=" + g.to_string() + ", h=" + h.to_string());
    }
  }
  rep.details.push_back(std::to_string(pairs) + " random pairs");
  return rep;
}

MetaplecticReport verify_legendre_words(int64_t p) {
  require_prime(p);
  MetaplecticReport rep{"legendre", p, CheckStatus::Pass, std::nullopt, std::nullopt, {}};
  for (int64_t n = 1; n < p; ++n) {
    if (!w_of(p, SL2::U(n, p)).same_entries(w_gen(p, WGen::U, n))) {
      fail(rep, "word product for U(" + std::to_string(n) + ") differs from the Legendre construction");
    }
  }
  return rep;
}

}  // namespace qcong
