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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qcong/error.hpp"
#include "qcong/theory.hpp"
#include "test_support.hpp"

using namespace qcong;
using qcong::testing::embed_complex;

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

bool near(std::complex<long double> x, std::complex<long double> y) { return std::abs(x - y) < 1e-9L; }

}  // namespace

TEST_CASE("parse selectors") {
  CHECK(Theory::parse("so3:7").name() == "so3:7");
  CHECK(Theory::parse("su2:8").root_order() == 64);
  CHECK(Theory::parse("so3:5").root_order() == 20);
  for (const char* bad : {"so3:4", "so3:1", "su2:3", "so4:5", "so3:", "so3:x"}) {
    CHECK_THROWS_AS(Theory::parse(bad), Error);
  }
}

TEST_CASE("root choices") {
  for (int64_t r : {3, 5, 7, 9, 11, 13, 15, 25}) {
    const Theory T = Theory::so3(r);
    const int64_t N = 4 * r;
    CHECK(T.root_order() == N);
    CHECK(T.q().as_root_of_unity() == std::optional<std::pair<int, int64_t>>({1, 4}));
    CHECK(T.A().pow(-2) == T.q());
    CHECK(T.a().pow(r) == CycNum::one(N));
    CHECK(T.i() * T.i() == CycNum::integer(N, -1));
    // kappa = zeta^{6 + r(r+1)/2}
    const int64_t e = mod_floor(6 + r * (r + 1) / 2, N);
    CHECK(T.kappa_order() == N / gcd64(e, N));
    CHECK(T.colors().size() == static_cast<size_t>((r - 1) / 2));
    CHECK(T.max_color() == r - 2);
  }
  CHECK(Theory::so3(5).kappa_order() == 20);
  CHECK(Theory::so3(7).kappa_order() == 14);
  CHECK(Theory::so3(13).kappa_order() == 52);

  const Theory S = Theory::su2(8);
  CHECK(S.root_order() == 64);
  CHECK(S.A() == CycNum::zeta(64, 2));
  CHECK(S.colors().size() == 7);
}

TEST_CASE("quantum integers and loop values against complex embedding") {
  for (int64_t r : {5, 7, 9}) {
    const Theory T = Theory::so3(r);
    for (int64_t n = 1; n < r; ++n) {
      const long double expect = std::sin(2 * kPi * n / r) / std::sin(2 * kPi / r);
      CHECK(near(embed_complex(T.qint(n)), expect));
      CHECK(near(embed_complex(T.delta(n - 1)), (n % 2 == 1 ? 1 : -1) * expect));
    }
    CHECK(T.qint(0).is_zero());
    CHECK(T.qint(r).is_zero());
  }
}

TEST_CASE("eta and kappa identities") {
  for (int64_t r : {3, 5, 7, 9, 11, 13, 15}) {
    const Theory T = Theory::so3(r);
    CycNum d2 = CycNum::zero(T.root_order()), d2mu = d2;
    for (int64_t c : T.colors()) {
      d2 += T.delta(c) * T.delta(c);
      d2mu += T.delta(c) * T.delta(c) * T.twist(c);
    }
    CHECK(T.eta() * T.eta() * d2 == CycNum::one(T.root_order()));
    CHECK(T.eta() * d2mu == T.framing_kappa());
    CHECK(T.kappa_sign() == 1);
    // |eta|^2 = 1 / sum Delta^2, numerically
    long double sum = 0;
    for (int64_t c : T.colors()) sum += std::pow(std::sin(2 * kPi * (c + 1) / r) / std::sin(2 * kPi / r), 2);
    CHECK(std::abs(std::norm(embed_complex(T.eta())) - 1 / sum) < 1e-9L);
  }
}

TEST_CASE("Hopf values") {
  for (int64_t r : {5, 7, 9}) {
    const Theory T = Theory::so3(r);
    const auto& cs = T.colors();
    for (int64_t b : cs) {
      CHECK(T.hopf(0, b) == T.delta(b));
      for (int64_t c : cs) {
        CHECK(T.hopf(b, c) == T.hopf(c, b));
        CHECK(T.reduced_hopf(c, b) * T.delta(c) == T.hopf(b, c));
        // Numeric: (-1)^{b+c} [(b+1)(c+1)]
        const long double v = std::sin(2 * kPi * (b + 1) * (c + 1) / r) / std::sin(2 * kPi / r);
        CHECK(near(embed_complex(T.hopf(b, c)), ((b + c) % 2 == 0 ? 1 : -1) * v));
      }
    }
    // The S-matrix eta * H squares to the identity on even colors.
    for (int64_t a : cs)
      for (int64_t b : cs) {
        CycNum s = CycNum::zero(T.root_order());
        for (int64_t c : cs) s += T.eta() * T.eta() * T.hopf(a, c) * T.hopf(c, b);
        CHECK(s == CycNum::integer(T.root_order(), a == b ? 1 : 0));
      }
  }
}

TEST_CASE("twists and half twists") {
  const Theory T = Theory::so3(7);
  for (int64_t c = 0; c <= T.max_color(); ++c) {
    CHECK(near(embed_complex(T.twist(c)), std::polar(1.0L, 2 * kPi * (-2) * c * (c + 2) / 28) * (c % 2 == 0 ? 1.0L : -1.0L)));
    for (int64_t f : {-3, -1, 0, 2, 5}) {
      const auto [sign, e] = T.twist_monomial(c, f);
      const CycNum z = CycNum::zeta(T.root_order(), e);
      CHECK((sign > 0 ? z : -z) == T.twist(c).pow(f));
    }
    for (int64_t j = 0; 2 * j <= std::min(2 * c, 2 * (T.max_color() - c)); ++j) {
      CHECK(T.lam(c, j, 1) * T.lam(c, j, -1) == CycNum::one(T.root_order()));
    }
  }
  CHECK_THROWS_AS(T.check_color(6), Error);
  CHECK_THROWS_AS(T.check_color(-1), Error);
}

TEST_CASE("subring bridge") {
  std::mt19937_64 rng(qcong::testing::test_seed());
  for (int64_t r : {5, 7, 9}) {
    const Theory T = Theory::so3(r);
    CHECK(T.a_order() == r);
    for (int k = 0; k < 10; ++k) {
      const CycNum y = qcong::testing::random_element(rng, r);
      CHECK(T.to_a(T.from_a(y)) == y);
    }
    CHECK(T.from_a(CycNum::zeta(r, 1)) == T.a());
    CHECK_THROWS_AS(T.to_a(T.i()), Error);
  }
}
