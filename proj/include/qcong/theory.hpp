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
 * @file theory.hpp
 * @brief SO(3) and SU(2) Kauffman-bracket theories at a root of unity.
 *
 * All constants are exact elements of Z[zeta_N] with N = 4r (SO(3)) or
 * N = 8n (SU(2)). Monomials are tracked as (sign, exponent of zeta_N).
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/cyclotomic.hpp"

namespace qcong {

enum class TheoryKind { SO3, SU2 };

class Theory {
 public:
  /// r odd, r >= 3. Validates the Gauss-sum identities and throws
  /// ValidationFailed if one of them does not hold.
  static Theory so3(int64_t r);
  /// n > 3.
  static Theory su2(int64_t n);
  /// "so3:<r>" or "su2:<n>".
  static Theory parse(std::string_view selector);

  TheoryKind kind() const { return kind_; }
  /// r for SO(3), n for SU(2).
  int64_t level() const { return level_; }
  int64_t root_order() const { return N_; }
  std::string name() const;

  /// Exponents e with the constant equal to zeta_N^e.
  int64_t A_exp() const { return A_exp_; }
  int64_t q_exp() const { return -2 * A_exp_; }
  int64_t kappa_exp() const { return kappa_exp_; }

  CycNum q() const { return CycNum::zeta(N_, q_exp()); }
  CycNum A() const { return CycNum::zeta(N_, A_exp_); }
  CycNum a() const { return CycNum::zeta(N_, 4 * A_exp_); }
  CycNum i() const { return CycNum::zeta(N_, N_ / 4); }
  CycNum kappa() const { return CycNum::zeta(N_, kappa_exp_); }
  int64_t kappa_order() const { return N_ / gcd64(mod_floor(kappa_exp_, N_), N_); }

  /// SO(3) only; carries a denominator r.
  const CycNum& eta() const;
  /// s in {+1,-1} with eta * sum Delta_c^2 mu_c = s * kappa (SO(3)); +1 for SU(2).
  int kappa_sign() const { return kappa_sign_; }
  /// kappa_sign() * kappa(): the framing correction used by invariants.
  CycNum framing_kappa() const { return kappa_sign_ > 0 ? kappa() : -kappa(); }

  /// (r-1)/2 for SO(3), 0 for SU(2).
  int64_t d() const { return kind_ == TheoryKind::SO3 ? (level_ - 1) / 2 : 0; }
  /// Colors summed over in surgery.
  const std::vector<int64_t>& colors() const { return colors_; }
  /// Largest color accepted anywhere (fixed colors included).
  int64_t max_color() const { return level_ - 2; }

  CycNum qint(int64_t n) const;
  CycNum delta(int64_t c) const;
  CycNum twist(int64_t c) const;
  /// Sign and zeta exponent of twist(c)^f.
  std::pair<int, int64_t> twist_monomial(int64_t c, int64_t f) const;
  CycNum hopf(int64_t b, int64_t c) const;
  /// hopf(c, b) / delta(c); always integral.
  CycNum reduced_hopf(int64_t c, int64_t b) const;
  /// (lambda_{2j}^{cc})^e, e = +-1.
  CycNum lam(int64_t c, int64_t j, int e) const;

  void check_color(int64_t c) const;

  /// Coordinates of x in powers of a (an element of Z[zeta_m], m = order of a).
  /// Throws NotInSubring when x is not in Z[a] (or its localization).
  CycNum to_a(const CycNum& x) const;
  /// Inverse of to_a.
  CycNum from_a(const CycNum& y) const;
  int64_t a_order() const { return N_ / gcd64(mod_floor(4 * A_exp_, N_), N_); }

 private:
  Theory(TheoryKind kind, int64_t level);
  void validate();

  TheoryKind kind_;
  int64_t level_;
  int64_t N_;
  int64_t A_exp_;
  int64_t kappa_exp_;
  int kappa_sign_ = 1;
  std::optional<CycNum> eta_;
  std::vector<int64_t> colors_;
};

}  // namespace qcong
