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

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in Z[zeta_N] and its localization Z[zeta_N, 1/l].
 *
 * Elements are stored in the power basis 1, zeta, ..., zeta^{phi(N)-1},
 * fully reduced modulo the N-th cyclotomic polynomial, so two elements are
 * equal exactly when their coefficient vectors are. A nonnegative
 * denominator exponent e together with a base l represents division by
 * l^e; the exponent is always minimal.
 */

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qcong {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Immutable per-N data: Phi_N and the canonical images of zeta^k.
class CyclotomicRing {
 public:
  /// Shared, interned instance for root order N (thread-safe).
  static std::shared_ptr<const CyclotomicRing> get(int64_t N);

  int64_t order() const { return N_; }
  int64_t phi() const { return phi_; }
  /// Coefficients of Phi_N, low degree first (length phi + 1, monic).
  const std::vector<int64_t>& cyclotomic_poly() const { return poly_; }
  /// Canonical coordinates of zeta^k for 0 <= k < N.
  const std::vector<BigInt>& power(int64_t k) const;

  /// Reduce an arbitrary-length coefficient buffer (index = exponent) in place
  /// and truncate it to phi entries.
  void reduce(std::vector<BigInt>& buf) const;

  explicit CyclotomicRing(int64_t N);

 private:
  int64_t N_;
  int64_t phi_;
  std::vector<int64_t> poly_;
  std::vector<std::pair<int64_t, int64_t>> poly_terms_;  // (degree, coeff), degree < phi
  std::vector<std::vector<BigInt>> powers_;
};

/// Euler totient.
int64_t euler_phi(int64_t n);
/// Coefficients of Phi_n as integers, low degree first.
std::vector<int64_t> cyclotomic_polynomial(int64_t n);
int64_t gcd64(int64_t a, int64_t b);
int64_t mod_floor(int64_t a, int64_t m);

/// Infinity marker for valuations.
inline constexpr int64_t kInfiniteValuation = -1;

class CycNum {
 public:
  /// Zero in Z[zeta_1] = Z.
  CycNum();

  /// Sum of c_k zeta_N^{e_k}; exponents taken mod N.
  static CycNum make(int64_t N, std::span<const std::pair<int64_t, BigInt>> terms);
  static CycNum make(int64_t N, std::initializer_list<std::pair<int64_t, int64_t>> terms);
  static CycNum integer(int64_t N, const BigInt& value);
  static CycNum zero(int64_t N) { return integer(N, 0); }
  static CycNum one(int64_t N) { return integer(N, 1); }
  static CycNum zeta(int64_t N, int64_t k);
  /// coeffs / base^denom_exp, normalized.
  static CycNum from_coeffs(int64_t N, std::vector<BigInt> coeffs, int64_t denom_exp = 0,
                            const BigInt& base = 1);

  int64_t root_order() const { return ring_->order(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  int64_t denom_exp() const { return denom_exp_; }
  /// Localization base l (1 when denom_exp == 0).
  const BigInt& denom_base() const { return base_; }
  const std::shared_ptr<const CyclotomicRing>& ring() const { return ring_; }

  bool is_zero() const;
  bool is_integral() const { return denom_exp_ == 0; }

  CycNum operator-() const;
  friend CycNum operator+(const CycNum& x, const CycNum& y);
  friend CycNum operator-(const CycNum& x, const CycNum& y);
  friend CycNum operator*(const CycNum& x, const CycNum& y);
  CycNum& operator+=(const CycNum& y) { return *this = *this + y; }
  CycNum& operator-=(const CycNum& y) { return *this = *this - y; }
  CycNum& operator*=(const CycNum& y) { return *this = *this * y; }
  friend CycNum operator*(const CycNum& x, const BigInt& k);
  friend bool operator==(const CycNum& x, const CycNum& y);

  /// Multiply by zeta_N^k without a general product.
  CycNum times_zeta(int64_t k) const;

  /// k < 0 only for roots of unity.
  CycNum pow(int64_t k) const;

  /// If this element is +-zeta_N^k, returns (sign, k mod N) with k minimal
  /// for sign +1 preferred.
  std::optional<std::pair<int, int64_t>> as_root_of_unity() const;

  /// zeta_N -> zeta_M (M a multiple of N).
  CycNum embed(int64_t M) const;
  /// Ring automorphism zeta -> zeta^t, gcd(t, N) = 1.
  CycNum galois(int64_t t) const;
  CycNum conj() const { return galois(ring_->order() - 1); }

  /// Divide every coefficient by l^k, raising the denominator exponent.
  CycNum divided_by_base_power(const BigInt& base, int64_t k) const;

  std::string to_string() const;

 private:
  CycNum(std::shared_ptr<const CyclotomicRing> ring, std::vector<BigInt> coeffs,
         int64_t denom_exp, BigInt base);
  void normalize();

  std::shared_ptr<const CyclotomicRing> ring_;
  std::vector<BigInt> coeffs_;
  int64_t denom_exp_ = 0;
  BigInt base_ = 1;
};

/// Coordinates of x in powers of zeta_N^g (an element of order m); the
/// result lives at root order m and keeps x's denominator.
CycNum to_subring(const CycNum& x, int64_t g, int64_t m);

/// s with s*s = r, built from the quadratic Gauss sum.
CycNum sqrt_odd(int64_t r, int64_t N);

/// Largest v with x in (1 - zeta_N^u)^v, where zeta_N^u has odd prime
/// order p. Returns kInfiniteValuation for x = 0.
int64_t val_one_minus(const CycNum& x, int64_t u);

/// z with z*y = x. The quotient may carry a denominator only when a
/// localization base is available (from x, y, or `base`).
CycNum divide_exact(const CycNum& x, const CycNum& y, const BigInt& base = 1);

/// Unique rational solution of A z = b (A rows x cols, full column rank), or
/// nullopt if inconsistent.
std::optional<std::vector<BigRat>> solve_rational(const std::vector<std::vector<BigInt>>& A,
                                                  const std::vector<BigInt>& b);

}  // namespace qcong
