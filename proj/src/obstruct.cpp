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

#include "qcong/obstruct.hpp"

#include <algorithm>
#include <sstream>

#include "qcong/error.hpp"

namespace qcong {

std::optional<PhaseWitness> phase_equal(const Theory& T, const CycNum& x, const CycNum& y) {
  if (y.is_zero()) throw Error(Errc::InvalidArgument, "phase_equal needs y != 0");
  if (x.root_order() != y.root_order()) throw Error(Errc::NotAMultiple, "phase_equal operands differ in root order");
  const int64_t N = x.root_order();
  if (N % T.root_order() != 0) throw Error(Errc::NotAMultiple, "operands not in the theory ring");
  const int64_t step = T.kappa_exp() * (N / T.root_order());
  CycNum shifted = y;
  for (int64_t m = 0; m < T.kappa_order(); ++m) {
    if (x == shifted) return PhaseWitness{1, m};
    if (x == -shifted) return PhaseWitness{-1, m};
    shifted = shifted.times_zeta(step);
  }
  return std::nullopt;
}

std::string TruncPoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int64_t e = 0; e < k; ++e) {
    const int64_t c = coeffs[e];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (e == 0 || c != 1) out << c;
    if (e >= 1) out << "h";
    if (e >= 2) out << "^" << e;
  }
  if (first) out << "0";
  out << " (mod " << p << ", h^" << k << ")";
  return out.str();
}

TruncPoly make_trunc(int64_t p, std::vector<int64_t> coeffs) {
  TruncPoly t{p, static_cast<int64_t>(coeffs.size()), std::move(coeffs)};
  for (auto& c : t.coeffs) c = mod_floor(c, p);
  return t;
}

TruncPoly trunc_mul(const TruncPoly& x, const TruncPoly& y) {
  if (x.p != y.p || x.k != y.k) throw Error(Errc::InvalidArgument, "truncation rings differ");
  std::vector<int64_t> out(x.k, 0);
  for (int64_t i = 0; i < x.k; ++i)
    for (int64_t j = 0; i + j < x.k; ++j) out[i + j] = (out[i + j] + x.coeffs[i] * y.coeffs[j]) % x.p;
  return TruncPoly{x.p, x.k, out};
}

namespace {

// (1 - h)^e mod (p, h^k), e >= 0
std::vector<int64_t> one_minus_h_power(int64_t e, int64_t k, int64_t p) {
  std::vector<int64_t> out(k, 0);
  BigInt binom = 1;
  for (int64_t i = 0; i < k && i <= e; ++i) {
    const BigInt term = (i % 2 == 0) ? binom : BigInt(-binom);
    out[i] = mod_floor(BigInt(term % p).get_si(), p);
    binom = binom * (e - i) / (i + 1);
  }
  return out;
}

}  // namespace

TruncPoly truncate(const CycNum& x, int64_t k) {
  const int64_t p = x.root_order();
  if (p < 3 || p % 2 == 0) throw Error(Errc::InvalidArgument, "truncation needs an odd modulus, got " + std::to_string(p));
  if (k < 1) throw Error(Errc::InvalidArgument, "truncation order must be positive");
  if (k > p - 1) {
    throw Error(Errc::TruncationTooDeep, "k = " + std::to_string(k) + " exceeds p - 1 = " + std::to_string(p - 1));
  }
  if (!x.is_integral()) throw Error(Errc::HasDenominator, "cannot truncate an element with a denominator");
  // The map is well defined only when Phi_p(1 - h) vanishes mod (p, h^k).
  {
    const auto& phi = x.ring()->cyclotomic_poly();
    std::vector<int64_t> acc(k, 0);
    for (size_t e = 0; e < phi.size(); ++e) {
      if (phi[e] == 0) continue;
      const auto pw = one_minus_h_power(static_cast<int64_t>(e), k, p);
      for (int64_t i = 0; i < k; ++i) acc[i] = mod_floor(acc[i] + phi[e] * pw[i], p);
    }
    if (std::any_of(acc.begin(), acc.end(), [](int64_t c) { return c != 0; })) {
      throw Error(Errc::TruncationTooDeep, "Phi(1-h) does not vanish mod (" + std::to_string(p) + ", h^" +
                                               std::to_string(k) + ")");
    }
  }
  std::vector<int64_t> out(k, 0);
  for (size_t e = 0; e < x.coeffs().size(); ++e) {
    const int64_t c = mod_floor(BigInt(x.coeffs()[e] % p).get_si(), p);
    if (c == 0) continue;
    const auto pw = one_minus_h_power(static_cast<int64_t>(e), k, p);
    for (int64_t i = 0; i < k; ++i) out[i] = (out[i] + c * pw[i]) % p;
  }
  return TruncPoly{p, k, out};
}

std::vector<std::pair<int64_t, int>> trunc_compare(const CycNum& x, const CycNum& y, int64_t k) {
  const int64_t p = x.root_order();
  if (y.root_order() != p) throw Error(Errc::InvalidArgument, "trunc_compare operands differ in root order");
  const TruncPoly plus = truncate(y, k);
  const TruncPoly minus = truncate(-y, k);
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t j = 0; j < p; ++j) {
    const TruncPoly lhs = truncate(x.times_zeta(j), k);
    if (lhs == plus) out.emplace_back(j, 1);
    if (lhs == minus) out.emplace_back(j, -1);
  }
  return out;
}

ScreenReport screen(std::string pair, std::vector<Exclusion> exclusions, std::optional<int64_t> odd_rule,
                    std::optional<int64_t> limit) {
  if (exclusions.empty()) throw Error(Errc::InvalidArgument, "screen needs at least one exclusion");
  std::optional<int64_t> two_power;
  for (const auto& ex : exclusions) {
    if (ex.base < 1) throw Error(Errc::InvalidArgument, "exclusion base must be positive");
    if ((ex.base & (ex.base - 1)) == 0) two_power = two_power ? std::min(*two_power, ex.base) : ex.base;
  }
  if (odd_rule && *odd_rule < 3) throw Error(Errc::InvalidArgument, "odd rule bound must be >= 3");
  if (!two_power || !odd_rule) {
    throw Error(Errc::InfiniteAllowedSet, "allowed set is unbounded: need an odd rule and an excluded power of two");
  }
  if (!limit) limit = *two_power * *odd_rule;

  ScreenReport report{std::move(pair), std::move(exclusions), odd_rule, {}};
  for (int64_t f = 2; f <= *limit; ++f) {
    bool ok = std::none_of(report.exclusions.begin(), report.exclusions.end(),
                           [f](const Exclusion& ex) { return f % ex.base == 0; });
    if (ok && odd_rule) {
      int64_t odd = f;
      while (odd % 2 == 0) odd /= 2;
      // every odd divisor is at most the odd part
      for (int64_t g = *odd_rule | 1; g <= odd && ok; g += 2) ok = (odd % g != 0);
    }
    if (ok) report.allowed.push_back(f);
  }
  return report;
}

}  // namespace qcong
