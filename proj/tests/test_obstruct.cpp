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


#include <algorithm>

#include "doctest.h"
#include "qcong/closedforms.hpp"
#include "qcong/error.hpp"
#include "qcong/obstruct.hpp"
#include "qcong/plumbing.hpp"
#include "test_support.hpp"

using namespace qcong;

namespace {

CycNum signed_kappa(const Theory& T, const PhaseWitness& w) {
  const CycNum k = T.kappa().pow(w.m);
  return w.sign > 0 ? k : -k;
}

std::vector<int64_t> allowed_of(std::vector<int64_t> bases, int64_t odd_rule) {
  std::vector<Exclusion> ex;
  for (int64_t b : bases) ex.push_back({b, "test"});
  return screen("X:Y", ex, odd_rule).allowed;
}

}  // namespace

TEST_CASE("phase_equal is an equivalence") {
  std::mt19937_64 rng(qcong::testing::test_seed());
  for (int64_t r : {5, 7, 9}) {
    const Theory T = Theory::so3(r);
    const int64_t N = T.root_order();
    std::uniform_int_distribution<int64_t> expo(0, T.kappa_order() - 1);
    for (int k = 0; k < 10; ++k) {
      const CycNum x = qcong::testing::random_element(rng, N);
      if (x.is_zero()) continue;
      CHECK(phase_equal(T, x, x) == PhaseWitness{1, 0});
      const PhaseWitness u{k % 2 == 0 ? 1 : -1, expo(rng)}, v{1, expo(rng)};
      const CycNum y = signed_kappa(T, u) * x, z = signed_kappa(T, v) * y;
      const auto xy = phase_equal(T, y, x), yx = phase_equal(T, x, y), xz = phase_equal(T, z, x);
      REQUIRE(xy);
      REQUIRE(yx);
      REQUIRE(xz);
      CHECK(signed_kappa(T, *xy) == signed_kappa(T, u));
      CHECK(signed_kappa(T, *xy) * signed_kappa(T, *yx) == CycNum::one(N));
      CHECK(signed_kappa(T, *xz) == signed_kappa(T, u) * signed_kappa(T, v));
      CHECK(!phase_equal(T, x + x, x));
    }
    CHECK_THROWS_AS(phase_equal(T, CycNum::one(N), CycNum::zero(N)), Error);
  }
}

TEST_CASE("truncation examples") {
  for (int64_t p : {5, 7, 11}) {
    CHECK(truncate(CycNum::one(p), 4).coeffs == std::vector<int64_t>{1, 0, 0, 0});
    CHECK(truncate(CycNum::zeta(p, 1), 4).coeffs == std::vector<int64_t>{1, p - 1, 0, 0});
    CHECK_THROWS_AS(truncate(CycNum::one(p), p), Error);
  }
  CHECK(truncate(CycNum::zeta(7, 1) * le_poincare(7), 4).coeffs == std::vector<int64_t>{1, 5, 4, 6});
  CHECK(truncate(le_poincare(7), 4).to_string() == "1 + 6h + 3h^2 + 2h^3 (mod 7, h^4)");
  try {
    truncate(CycNum::one(7), 7);
    FAIL("expected TruncationTooDeep");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TruncationTooDeep);
  }
}

TEST_CASE("truncation is a ring homomorphism") {
  std::mt19937_64 rng(qcong::testing::test_seed() + 3);
  for (int64_t p : {5, 7, 11, 13}) {
    for (int k = 0; k < 20; ++k) {
      const int64_t order = std::uniform_int_distribution<int64_t>(1, p - 1)(rng);
      const CycNum x = qcong::testing::random_element(rng, p), y = qcong::testing::random_element(rng, p);
      CHECK(truncate(x * y, order) == trunc_mul(truncate(x, order), truncate(y, order)));
      const TruncPoly sum = truncate(x + y, order), tx = truncate(x, order), ty = truncate(y, order);
      for (int64_t i = 0; i < order; ++i) CHECK(sum.coeffs[i] == (tx.coeffs[i] + ty.coeffs[i]) % p);
    }
  }
}

TEST_CASE("truncated comparisons") {
  const PlumbingTree P = parse_plumbing("H(0,-2,3,5)"), S = parse_plumbing("H(0,2,-3,-7)");
  const Theory T = Theory::so3(7);
  const CycNum iP = T.to_a(normalized(T, P)), iS = T.to_a(normalized(T, S)), imS = T.to_a(normalized(T, mirror(S)));
  CHECK(trunc_compare(iP, iS, 4).empty());
  CHECK(!trunc_compare(iS, imS, 4).empty());
  const auto self = trunc_compare(iP, iP, 4);
  CHECK(std::find(self.begin(), self.end(), std::pair<int64_t, int>{0, 1}) != self.end());
}

TEST_CASE("screen examples") {
  CHECK(allowed_of({32, 48}, 5) == std::vector<int64_t>{2, 3, 4, 6, 8, 12, 16, 24});
  CHECK(allowed_of({64, 48, 80}, 7) == std::vector<int64_t>{2, 3, 4, 5, 6, 8, 10, 12, 16, 20, 24, 32, 40});
  CHECK(allowed_of({5, 48, 64, 112}, 9) == std::vector<int64_t>{2, 3, 4, 6, 7, 8, 12, 14, 16, 24, 28, 32, 56});
  const ScreenReport rep = screen("P:S3", {{32, "a"}, {48, "b"}}, 5);
  CHECK(rep.pair == "P:S3");
  CHECK(rep.odd_rule == std::optional<int64_t>(5));
  CHECK(rep.exclusions.size() == 2);
}

TEST_CASE("screen output is divisor closed") {
  std::mt19937_64 rng(qcong::testing::test_seed() + 4);
  std::uniform_int_distribution<int64_t> base(2, 200), bound(3, 15), two(1, 7);
  for (int k = 0; k < 100; ++k) {
    std::vector<int64_t> bases{int64_t{1} << two(rng), base(rng), base(rng)};
    const auto allowed = allowed_of(bases, bound(rng));
    for (int64_t f : allowed) {
      for (int64_t b : bases) CHECK(f % b != 0);
      for (int64_t g = 2; g < f; ++g)
        if (f % g == 0) CHECK(std::binary_search(allowed.begin(), allowed.end(), g));
    }
  }
}

TEST_CASE("screen rejects unbounded rule sets") {
  for (auto odd : {std::optional<int64_t>{}, std::optional<int64_t>{5}}) {
    try {
      screen("X:Y", {{9, "t"}, {12, "t"}}, odd);
      FAIL("expected InfiniteAllowedSet");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InfiniteAllowedSet);
    }
  }
  CHECK_THROWS_AS(screen("X:Y", {}, 5), Error);
  CHECK_THROWS_AS(screen("X:Y", {{16, "t"}}, 1), Error);
}
