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

#include "qcong/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qcong/error.hpp"

namespace qcong {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NegativePowerOfNonUnit: return "NegativePowerOfNonUnit";
    case Errc::NotAMultiple: return "NotAMultiple";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NotInSubring: return "NotInSubring";
    case Errc::BadRootOrder: return "BadRootOrder";
    case Errc::HasDenominator: return "HasDenominator";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::LocalizationMismatch: return "LocalizationMismatch";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::InadmissibleColor: return "InadmissibleColor";
    case Errc::ParseError: return "ParseError";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::TruncationTooDeep: return "TruncationTooDeep";
    case Errc::InfiniteAllowedSet: return "InfiniteAllowedSet";
    case Errc::BadPrime: return "BadPrime";
    case Errc::NotParityEquivariant: return "NotParityEquivariant";
    case Errc::IllegalMove: return "IllegalMove";
    case Errc::StepFailed: return "StepFailed";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t mod_floor(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int64_t euler_phi(int64_t n) {
  int64_t result = n;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

int mobius(int64_t n) {
  int sign = 1;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

// poly *= (x^d - 1)
void mul_xd_minus_one(std::vector<BigInt>& poly, int64_t d) {
  std::vector<BigInt> out(poly.size() + d);
  for (size_t i = 0; i < poly.size(); ++i) {
    out[i + d] += poly[i];
    out[i] -= poly[i];
  }
  poly = std::move(out);
}

// poly /= (x^d - 1), exact.
void div_xd_minus_one(std::vector<BigInt>& poly, int64_t d) {
  // poly = (x^d - 1) * quo; solve from the top.
  const int64_t n = static_cast<int64_t>(poly.size()) - 1;
  std::vector<BigInt> quo(n - d + 1);
  std::vector<BigInt> rem = poly;
  for (int64_t k = n; k >= d; --k) {
    quo[k - d] = rem[k];
    rem[k] = 0;
    rem[k - d] += quo[k - d];
  }
  poly = std::move(quo);
}

}  // namespace

std::vector<int64_t> cyclotomic_polynomial(int64_t n) {
  std::vector<BigInt> poly{1};
  std::vector<int64_t> divisors;
  for (int64_t d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  for (int64_t d : divisors)
    if (mobius(n / d) == 1) mul_xd_minus_one(poly, d);
  for (int64_t d : divisors)
    if (mobius(n / d) == -1) div_xd_minus_one(poly, d);
  std::vector<int64_t> out;
  out.reserve(poly.size());
  for (const auto& c : poly) {
    if (!c.fits_slong_p()) throw Error(Errc::InvalidArgument, "cyclotomic coefficient overflow");
    out.push_back(c.get_si());
  }
  return out;
}

CyclotomicRing::CyclotomicRing(int64_t N) : N_(N), phi_(euler_phi(N)), poly_(cyclotomic_polynomial(N)) {
  for (int64_t j = 0; j < phi_; ++j)
    if (poly_[j] != 0) poly_terms_.emplace_back(j, poly_[j]);
  powers_.resize(N_);
  std::vector<BigInt> cur(phi_);
  cur[0] = 1;
  for (int64_t k = 0; k < N_; ++k) {
    powers_[k] = cur;
    // cur *= zeta
    BigInt top = cur[phi_ - 1];
    for (int64_t j = phi_ - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (const auto& [j, c] : poly_terms_) cur[j] -= top * c;
  }
}

std::shared_ptr<const CyclotomicRing> CyclotomicRing::get(int64_t N) {
  if (N < 1) throw Error(Errc::InvalidArgument, "root order must be positive");
  static std::mutex mu;
  static std::map<int64_t, std::shared_ptr<const CyclotomicRing>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  auto ring = std::make_shared<const CyclotomicRing>(N);
  cache.emplace(N, ring);
  return ring;
}

const std::vector<BigInt>& CyclotomicRing::power(int64_t k) const { return powers_[mod_floor(k, N_)]; }

void CyclotomicRing::reduce(std::vector<BigInt>& buf) const {
  if (static_cast<int64_t>(buf.size()) > N_) {
    for (size_t k = N_; k < buf.size(); ++k)
      if (buf[k] != 0) buf[k % N_] += buf[k];
    buf.resize(N_);
  }
  for (int64_t deg = static_cast<int64_t>(buf.size()) - 1; deg >= phi_; --deg) {
    if (buf[deg] == 0) continue;
    const BigInt c = buf[deg];
    const int64_t shift = deg - phi_;
    for (const auto& [j, pj] : poly_terms_) {
      if (pj == 1)
        buf[shift + j] -= c;
      else if (pj == -1)
        buf[shift + j] += c;
      else
        buf[shift + j] -= c * pj;
    }
  }
  buf.resize(phi_);
}

// ---------------------------------------------------------------------------

CycNum::CycNum() : ring_(CyclotomicRing::get(1)), coeffs_(1) {}

CycNum::CycNum(std::shared_ptr<const CyclotomicRing> ring, std::vector<BigInt> coeffs, int64_t denom_exp,
               BigInt base)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)), denom_exp_(denom_exp), base_(std::move(base)) {
  ring_->reduce(coeffs_);
  normalize();
}

void CycNum::normalize() {
  if (denom_exp_ < 0) throw Error(Errc::InvalidArgument, "negative denominator exponent");
  if (is_zero()) {
    denom_exp_ = 0;
  }
  if (denom_exp_ > 0 && base_ <= 1)
    throw Error(Errc::InvalidArgument, "denominator exponent without a localization base");
  while (denom_exp_ > 0 &&
         std::all_of(coeffs_.begin(), coeffs_.end(), [&](const BigInt& c) { return mpz_divisible_p(c.get_mpz_t(), base_.get_mpz_t()); })) {
    for (auto& c : coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), base_.get_mpz_t());
    --denom_exp_;
  }
  if (denom_exp_ == 0) base_ = 1;
}

CycNum CycNum::make(int64_t N, std::span<const std::pair<int64_t, BigInt>> terms) {
  auto ring = CyclotomicRing::get(N);
  std::vector<BigInt> buf(N);
  for (const auto& [e, c] : terms) buf[mod_floor(e, N)] += c;
  return CycNum(std::move(ring), std::move(buf), 0, 1);
}

CycNum CycNum::make(int64_t N, std::initializer_list<std::pair<int64_t, int64_t>> terms) {
  std::vector<std::pair<int64_t, BigInt>> big;
  for (const auto& [e, c] : terms) big.emplace_back(e, BigInt(static_cast<long>(c)));
  return make(N, big);
}

CycNum CycNum::integer(int64_t N, const BigInt& value) {
  auto ring = CyclotomicRing::get(N);
  std::vector<BigInt> c(ring->phi());
  c[0] = value;
  return CycNum(std::move(ring), std::move(c), 0, 1);
}

CycNum CycNum::zeta(int64_t N, int64_t k) {
  auto ring = CyclotomicRing::get(N);
  std::vector<BigInt> c = ring->power(k);
  return CycNum(std::move(ring), std::move(c), 0, 1);
}

CycNum CycNum::from_coeffs(int64_t N, std::vector<BigInt> coeffs, int64_t denom_exp, const BigInt& base) {
  return CycNum(CyclotomicRing::get(N), std::move(coeffs), denom_exp, denom_exp > 0 ? base : BigInt(1));
}

bool CycNum::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

namespace {

void require_same_order(const CycNum& x, const CycNum& y) {
  if (x.root_order() != y.root_order())
    throw Error(Errc::InvalidArgument, "root orders differ: " + std::to_string(x.root_order()) + " vs " +
                                           std::to_string(y.root_order()));
}

BigInt common_base(const CycNum& x, const CycNum& y) {
  if (x.denom_exp() == 0) return y.denom_base();
  if (y.denom_exp() == 0) return x.denom_base();
  if (x.denom_base() != y.denom_base())
    throw Error(Errc::LocalizationMismatch, "elements localized at different bases");
  return x.denom_base();
}

BigInt big_pow(const BigInt& b, int64_t k) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

CycNum operator+(const CycNum& x, const CycNum& y) {
  require_same_order(x, y);
  const BigInt base = common_base(x, y);
  const int64_t e = std::max(x.denom_exp_, y.denom_exp_);
  std::vector<BigInt> c = x.coeffs_;
  const BigInt sx = big_pow(base, e - x.denom_exp_);
  const BigInt sy = big_pow(base, e - y.denom_exp_);
  if (sx != 1)
    for (auto& v : c) v *= sx;
  for (size_t i = 0; i < c.size(); ++i) {
    if (sy == 1)
      c[i] += y.coeffs_[i];
    else
      c[i] += sy * y.coeffs_[i];
  }
  return CycNum(x.ring_, std::move(c), e, base);
}

CycNum operator-(const CycNum& x, const CycNum& y) { return x + (-y); }

CycNum operator*(const CycNum& x, const CycNum& y) {
  require_same_order(x, y);
  const BigInt base = common_base(x, y);
  const size_t n = x.coeffs_.size();
  std::vector<BigInt> buf(2 * n - 1);
  for (size_t i = 0; i < n; ++i) {
    if (x.coeffs_[i] == 0) continue;
    const mpz_srcptr xi = x.coeffs_[i].get_mpz_t();
    for (size_t j = 0; j < n; ++j) {
      if (y.coeffs_[j] == 0) continue;
      mpz_addmul(buf[i + j].get_mpz_t(), xi, y.coeffs_[j].get_mpz_t());
    }
  }
  return CycNum(x.ring_, std::move(buf), x.denom_exp_ + y.denom_exp_, base);
}

CycNum operator*(const CycNum& x, const BigInt& k) {
  CycNum out = x;
  for (auto& c : out.coeffs_) c *= k;
  out.normalize();
  return out;
}

bool operator==(const CycNum& x, const CycNum& y) {
  return x.root_order() == y.root_order() && x.denom_exp_ == y.denom_exp_ && x.base_ == y.base_ &&
         x.coeffs_ == y.coeffs_;
}

CycNum CycNum::times_zeta(int64_t k) const {
  const int64_t N = ring_->order();
  const int64_t shift = mod_floor(k, N);
  std::vector<BigInt> buf(N);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    int64_t idx = static_cast<int64_t>(j) + shift;
    if (idx >= N) idx -= N;
    buf[idx] = coeffs_[j];
  }
  return CycNum(ring_, std::move(buf), denom_exp_, base_);
}

std::optional<std::pair<int, int64_t>> CycNum::as_root_of_unity() const {
  if (denom_exp_ != 0) return std::nullopt;
  const int64_t N = ring_->order();
  for (int64_t k = 0; k < N; ++k) {
    const auto& p = ring_->power(k);
    if (p == coeffs_) return std::make_pair(1, k);
  }
  for (int64_t k = 0; k < N; ++k) {
    const auto& p = ring_->power(k);
    bool neg = true;
    for (size_t j = 0; j < p.size() && neg; ++j) neg = (p[j] == -coeffs_[j]);
    if (neg) return std::make_pair(-1, k);
  }
  return std::nullopt;
}

CycNum CycNum::pow(int64_t k) const {
  if (k < 0) {
    auto unit = as_root_of_unity();
    if (!unit) throw Error(Errc::NegativePowerOfNonUnit, "negative power of " + to_string());
    const int64_t N = ring_->order();
    const int64_t m = -k;
    CycNum out = zeta(N, mod_floor(-unit->second * (m % N), N));
    if (unit->first < 0 && (m % 2 == 1)) out = -out;
    return out;
  }
  CycNum result = integer(ring_->order(), 1);
  CycNum base = *this;
  int64_t e = k;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

CycNum CycNum::embed(int64_t M) const {
  const int64_t N = ring_->order();
  if (M < 1 || M % N != 0)
    throw Error(Errc::NotAMultiple, std::to_string(M) + " is not a multiple of " + std::to_string(N));
  const int64_t step = M / N;
  std::vector<BigInt> buf(M);
  for (size_t j = 0; j < coeffs_.size(); ++j) buf[j * step] = coeffs_[j];
  return CycNum(CyclotomicRing::get(M), std::move(buf), denom_exp_, base_);
}

CycNum CycNum::galois(int64_t t) const {
  const int64_t N = ring_->order();
  if (gcd64(mod_floor(t, N), N) != 1 && N > 1)
    throw Error(Errc::NotCoprime, std::to_string(t) + " is not coprime to " + std::to_string(N));
  std::vector<BigInt> buf(N);
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    buf[mod_floor(static_cast<int64_t>(j) * mod_floor(t, N), N)] += coeffs_[j];
  }
  return CycNum(ring_, std::move(buf), denom_exp_, base_);
}

CycNum CycNum::divided_by_base_power(const BigInt& base, int64_t k) const {
  if (k == 0) return *this;
  if (denom_exp_ > 0 && base_ != base) throw Error(Errc::LocalizationMismatch, "different localization base");
  return CycNum(ring_, coeffs_, denom_exp_ + k, base);
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (!first) os << (coeffs_[j] > 0 ? " + " : " - ");
    else if (coeffs_[j] < 0) os << "-";
    first = false;
    BigInt a = abs(coeffs_[j]);
    if (j == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "z" << (j == 1 ? std::string() : "^" + std::to_string(j));
    }
  }
  if (first) os << "0";
  if (denom_exp_ > 0) os << " / " << base_ << "^" << denom_exp_;
  os << "  (N=" << ring_->order() << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

std::optional<std::vector<BigRat>> solve_rational(const std::vector<std::vector<BigInt>>& A,
                                                  const std::vector<BigInt>& b) {
  const size_t rows = A.size();
  const size_t cols = rows ? A[0].size() : 0;
  // Fraction-free (Bareiss) elimination on the augmented integer matrix.
  std::vector<std::vector<BigInt>> M(rows, std::vector<BigInt>(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) M[i][j] = A[i][j];
    M[i][cols] = b[i];
  }
  std::vector<size_t> pivot_cols;
  BigInt prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && M[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j <= cols; ++j) {
        BigInt v = M[r][c] * M[i][j] - M[i][c] * M[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        M[i][j] = std::move(v);
      }
      M[i][c] = 0;
    }
    prev = M[r][c];
    pivot_cols.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (M[i][cols] != 0) return std::nullopt;
  if (pivot_cols.size() != cols) throw Error(Errc::InvalidArgument, "linear system is not of full column rank");
  std::vector<BigRat> z(cols);
  for (size_t k = cols; k-- > 0;) {
    BigRat acc(M[k][cols]);
    for (size_t j = k + 1; j < cols; ++j) acc -= BigRat(M[k][j]) * z[j];
    z[k] = acc / BigRat(M[k][k]);
    z[k].canonicalize();
  }
  return z;
}

CycNum to_subring(const CycNum& x, int64_t g, int64_t m) {
  const int64_t N = x.root_order();
  if (m < 1 || N / gcd64(N, mod_floor(g, N)) != m)
    throw Error(Errc::InvalidArgument, "zeta^g does not have order m");
  const auto& ring = *x.ring();
  const int64_t cols = euler_phi(m);
  std::vector<std::vector<BigInt>> A(ring.phi(), std::vector<BigInt>(cols));
  for (int64_t k = 0; k < cols; ++k) {
    const auto& p = ring.power(mod_floor(g * k, N));
    for (int64_t i = 0; i < ring.phi(); ++i) A[i][k] = p[i];
  }
  auto sol = solve_rational(A, x.coeffs());
  if (!sol) throw Error(Errc::NotInSubring, x.to_string());
  std::vector<BigInt> ints;
  for (const auto& v : *sol) {
    if (v.get_den() != 1) throw Error(Errc::NotInSubring, x.to_string());
    ints.push_back(v.get_num());
  }
  return CycNum::from_coeffs(m, std::move(ints), x.denom_exp(), x.denom_base());
}

CycNum sqrt_odd(int64_t r, int64_t N) {
  if (r < 3 || r % 2 == 0) throw Error(Errc::InvalidArgument, "sqrt_odd needs odd r >= 3");
  if (N % (4 * r) != 0) throw Error(Errc::BadRootOrder, "4r must divide the root order");
  std::vector<std::pair<int64_t, BigInt>> terms;
  for (int64_t j = 0; j < r; ++j) terms.emplace_back((N / r) * ((j * j) % r), BigInt(1));
  CycNum gauss = CycNum::make(N, terms);
  if (r % 4 == 1) return gauss;
  return -(CycNum::zeta(N, N / 4) * gauss);
}

int64_t val_one_minus(const CycNum& x, int64_t u) {
  if (!x.is_integral()) throw Error(Errc::HasDenominator, x.to_string());
  const int64_t N = x.root_order();
  const int64_t p = N / gcd64(N, mod_floor(u, N));
  bool prime = p >= 3;
  for (int64_t d = 2; d * d <= p && prime; ++d) prime = (p % d != 0);
  if (!prime) throw Error(Errc::BadPrime, "zeta^u must have odd prime order");
  if (x.is_zero()) return kInfiniteValuation;
  // (1 - q) * prod_{k=2}^{p-1} (1 - q^k) = p, so x / (1 - q) = x * c / p.
  CycNum c = CycNum::one(N);
  for (int64_t k = 2; k < p; ++k) c = c * (CycNum::one(N) - CycNum::zeta(N, u * k));
  const BigInt bp(static_cast<long>(p));
  int64_t v = 0;
  CycNum cur = x;
  for (;;) {
    CycNum y = cur * c;
    const auto& cs = y.coeffs();
    if (!std::all_of(cs.begin(), cs.end(), [&](const BigInt& a) { return mpz_divisible_p(a.get_mpz_t(), bp.get_mpz_t()); }))
      break;
    std::vector<BigInt> next = cs;
    for (auto& a : next) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), bp.get_mpz_t());
    cur = CycNum::from_coeffs(N, std::move(next));
    ++v;
  }
  return v;
}

CycNum divide_exact(const CycNum& x, const CycNum& y, const BigInt& base) {
  require_same_order(x, y);
  if (y.is_zero()) throw Error(Errc::NotDivisible, "division by zero");
  BigInt ell = base;
  for (const CycNum* v : {&x, &y}) {
    if (v->denom_exp() > 0) {
      if (ell > 1 && ell != v->denom_base()) throw Error(Errc::LocalizationMismatch, "different localization base");
      ell = v->denom_base();
    }
  }
  const int64_t N = x.root_order();
  const int64_t phi = x.ring()->phi();
  const CycNum ynum = CycNum::from_coeffs(N, y.coeffs());
  std::vector<std::vector<BigInt>> A(phi, std::vector<BigInt>(phi));
  for (int64_t j = 0; j < phi; ++j) {
    const CycNum col = ynum.times_zeta(j);
    for (int64_t i = 0; i < phi; ++i) A[i][j] = col.coeffs()[i];
  }
  auto sol = solve_rational(A, x.coeffs());
  if (!sol) throw Error(Errc::NotDivisible, "inconsistent system");
  BigInt den = 1;
  for (const auto& v : *sol) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  int64_t k = 0;
  BigInt scale = 1;
  if (den != 1) {
    if (ell <= 1) throw Error(Errc::NotDivisible, x.to_string() + " by " + y.to_string());
    BigInt rest = den;
    for (;;) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), ell.get_mpz_t());
      if (g == 1) break;
      rest /= g;
    }
    if (rest != 1) throw Error(Errc::NotDivisible, "quotient needs a denominator outside the localization");
    while (!mpz_divisible_p(scale.get_mpz_t(), den.get_mpz_t())) {
      scale *= ell;
      ++k;
    }
  }
  std::vector<BigInt> z;
  z.reserve(phi);
  for (const auto& v : *sol) z.push_back(BigInt(v * scale));
  // x / y = (X / l^ex) / (Y / l^ey) = (Z / l^k) * l^ey / l^ex
  const BigInt up = big_pow(ell > 1 ? ell : BigInt(1), y.denom_exp());
  if (up != 1)
    for (auto& c : z) c *= up;
  return CycNum::from_coeffs(N, std::move(z), x.denom_exp() + k, ell > 1 ? ell : BigInt(1));
}

}  // namespace qcong
