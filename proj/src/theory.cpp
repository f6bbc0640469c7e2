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

#include "qcong/theory.hpp"

#include <charconv>

#include "qcong/error.hpp"

namespace qcong {

namespace {

int parity_sign(int64_t k) { return (k % 2 == 0) ? 1 : -1; }

CycNum signed_zeta(int64_t N, int sign, int64_t k) {
  CycNum z = CycNum::zeta(N, k);
  return sign > 0 ? z : -z;
}

}  // namespace

Theory::Theory(TheoryKind kind, int64_t level) : kind_(kind), level_(level) {
  if (kind == TheoryKind::SO3) {
    N_ = 4 * level;
    A_exp_ = -2;
    kappa_exp_ = 6 + level * (level + 1) / 2;
    for (int64_t c = 0; c <= level - 3; c += 2) colors_.push_back(c);
  } else {
    N_ = 8 * level;
    A_exp_ = 2;
    kappa_exp_ = -6 - level * (2 * level + 1);
    for (int64_t c = 0; c <= level - 2; ++c) colors_.push_back(c);
  }
  kappa_exp_ = mod_floor(kappa_exp_, N_);
}

Theory Theory::so3(int64_t r) {
  if (r < 3 || r % 2 == 0) throw Error(Errc::InvalidArgument, "so3 needs odd r >= 3, got " + std::to_string(r));
  Theory t(TheoryKind::SO3, r);
  const CycNum q = t.q();
  t.eta_ = (-(t.i() * (q - q.pow(-1)) * sqrt_odd(r, t.N_))).divided_by_base_power(BigInt(r), 1);
  t.validate();
  return t;
}

Theory Theory::su2(int64_t n) {
  if (n <= 3) throw Error(Errc::InvalidArgument, "su2 needs n > 3, got " + std::to_string(n));
  Theory t(TheoryKind::SU2, n);
  t.validate();
  return t;
}

Theory Theory::parse(std::string_view selector) {
  const auto colon = selector.find(':');
  if (colon == std::string_view::npos) throw Error(Errc::InvalidArgument, "theory selector needs kind:level");
  const std::string_view kind = selector.substr(0, colon);
  const std::string_view num = selector.substr(colon + 1);
  int64_t level = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), level);
  if (ec != std::errc() || ptr != num.data() + num.size()) {
    throw Error(Errc::InvalidArgument, "bad theory level '" + std::string(num) + "'");
  }
  if (kind == "so3") return so3(level);
  if (kind == "su2") return su2(level);
  throw Error(Errc::InvalidArgument, "unknown theory kind '" + std::string(kind) + "'");
}

std::string Theory::name() const {
  return (kind_ == TheoryKind::SO3 ? "so3:" : "su2:") + std::to_string(level_);
}

const CycNum& Theory::eta() const {
  if (!eta_) throw Error(Errc::InvalidArgument, name() + " has no eta");
  return *eta_;
}

void Theory::validate() {
  // kappa^2 == A^{-6-r(r+1)/2} (SO3) or A^{-6-n(2n+1)} (SU2)
  const int64_t k2 = kind_ == TheoryKind::SO3 ? -6 - level_ * (level_ + 1) / 2 : -6 - level_ * (2 * level_ + 1);
  if (kappa().pow(2) != A().pow(k2)) throw Error(Errc::ValidationFailed, name() + ": kappa^2 identity");
  if (kind_ != TheoryKind::SO3) return;

  CycNum sum_sq = CycNum::zero(N_);
  CycNum sum_twisted = CycNum::zero(N_);
  for (int64_t c : colors_) {
    const CycNum d2 = delta(c) * delta(c);
    sum_sq += d2;
    sum_twisted += d2 * twist(c);
  }
  if (eta() * eta() * sum_sq != CycNum::one(N_)) throw Error(Errc::ValidationFailed, name() + ": eta^2 D != 1");
  const CycNum u = eta() * sum_twisted;
  if (u == kappa()) {
    kappa_sign_ = 1;
  } else if (u == -kappa()) {
    kappa_sign_ = -1;
  } else {
    throw Error(Errc::ValidationFailed, name() + ": eta sum Delta^2 mu is not +-kappa");
  }
}

void Theory::check_color(int64_t c) const {
  if (c < 0 || c > max_color()) {
    throw Error(Errc::InadmissibleColor, "color " + std::to_string(c) + " outside [0," +
                                             std::to_string(max_color()) + "] for " + name());
  }
}

CycNum Theory::qint(int64_t n) const {
  std::vector<std::pair<int64_t, BigInt>> terms;
  const int64_t m = n < 0 ? -n : n;
  for (int64_t k = 0; k < m; ++k) terms.emplace_back(q_exp() * (m - 1 - 2 * k), BigInt(1));
  CycNum v = CycNum::make(N_, terms);
  return n < 0 ? -v : v;
}

CycNum Theory::delta(int64_t c) const {
  check_color(c);
  CycNum v = qint(c + 1);
  return parity_sign(c) > 0 ? v : -v;
}

std::pair<int, int64_t> Theory::twist_monomial(int64_t c, int64_t f) const {
  check_color(c);
  // (-A)^{c(c+2)} has sign (-1)^c
  const int sign = (f % 2 != 0) ? parity_sign(c) : 1;
  return {sign, mod_floor(A_exp_ * c * (c + 2) % N_ * (f % N_), N_)};
}

CycNum Theory::twist(int64_t c) const {
  auto [s, e] = twist_monomial(c, 1);
  return signed_zeta(N_, s, e);
}

CycNum Theory::hopf(int64_t b, int64_t c) const {
  check_color(b);
  check_color(c);
  CycNum v = qint((b + 1) * (c + 1));
  return parity_sign(b + c) > 0 ? v : -v;
}

CycNum Theory::reduced_hopf(int64_t c, int64_t b) const {
  check_color(b);
  check_color(c);
  std::vector<std::pair<int64_t, BigInt>> terms;
  for (int64_t k = 0; k <= b; ++k) terms.emplace_back(q_exp() * (c + 1) * (b - 2 * k), BigInt(1));
  CycNum v = CycNum::make(N_, terms);
  return parity_sign(b) > 0 ? v : -v;
}

CycNum Theory::lam(int64_t c, int64_t j, int e) const {
  check_color(c);
  if (j < 0 || j > c || c + j > max_color()) {
    throw Error(Errc::InadmissibleColor, "(c,c,2j) = (" + std::to_string(c) + "," + std::to_string(c) + "," +
                                             std::to_string(2 * j) + ") not admissible for " + name());
  }
  if (e != 1 && e != -1) throw Error(Errc::InvalidArgument, "lam exponent must be +-1");
  const int sign = parity_sign(c - j);
  return signed_zeta(N_, sign, A_exp_ * (c * (c + 2) - 2 * j * (j + 1)) * e);
}

CycNum Theory::to_a(const CycNum& x) const {
  return to_subring(x, mod_floor(4 * A_exp_, N_), a_order());
}

CycNum Theory::from_a(const CycNum& y) const {
  const int64_t m = a_order();
  if (y.root_order() != m) throw Error(Errc::InvalidArgument, "element is not at the order of a");
  const int64_t t = mod_floor(4 * A_exp_, N_) / (N_ / m);
  return y.galois(mod_floor(t, m)).embed(N_);
}

}  // namespace qcong
