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


#include <complex>
#include <numbers>

#include "doctest.h"
#include "qcong/closedforms.hpp"
#include "qcong/error.hpp"
#include "qcong/obstruct.hpp"
#include "qcong/theory.hpp"
#include "test_support.hpp"

using namespace qcong;
using qcong::testing::embed_complex;

namespace {

using Cx = std::complex<long double>;

Cx root(int64_t r, int64_t k = 1) { return std::polar(1.0L, 2 * std::numbers::pi_v<long double> * k / r); }

// Le's sum evaluated in C.
Cx le_direct(int64_t r) {
  const Cx a = root(r);
  Cx total = 0;
  for (int64_t n = 0; n <= (r - 3) / 2; ++n) {
    Cx term = std::pow(a, n);
    for (int64_t k = n + 1; k <= 2 * n + 1; ++k) term *= Cx(1) - std::pow(a, k);
    total += term;
  }
  return total / (Cx(1) - a);
}

// Geometric sums 1 + a + ... + a^{i^2 - 1}, exact in the power basis.
CycNum whitehead_direct(int64_t p) {
  std::vector<std::pair<int64_t, BigInt>> terms;
  for (int64_t i = 1; i <= (p - 1) / 2; ++i)
    for (int64_t k = 0; k < i * i; ++k) terms.emplace_back(k, 1);
  return CycNum::make(p, terms);
}

}  // namespace

TEST_CASE("Le's formula for the Poincare sphere") {
  CHECK(le_poincare(3) == CycNum::one(3));
  CHECK(le_poincare(5) == CycNum::make(5, {{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
  for (int64_t r : {5, 7, 9, 11, 13, 15, 25}) {
    const CycNum le = le_poincare(r);
    CHECK(le.denom_exp() == 0);
    CHECK(std::abs(embed_complex(le) - le_direct(r)) < 1e-8L);
  }
  // Congruent to 1 modulo (1 - a).
  for (int64_t p : {5, 7, 11, 13}) CHECK(val_one_minus(le_poincare(p) - CycNum::one(p), 1) >= 1);
  CHECK(truncate(le_poincare(7), 4).coeffs == std::vector<int64_t>{1, 6, 3, 2});
}

TEST_CASE("Whitehead surgery") {
  CHECK(whitehead_norm(5) == CycNum::make(5, {{0, 2}, {1, 1}, {2, 1}, {3, 1}}));
  for (int64_t p : {5, 7, 11, 13}) {
    const int64_t d = (p - 1) / 2;
    CHECK(whitehead_norm(p) == whitehead_direct(p));
    CHECK(val_one_minus(whitehead_norm(p), 1) == d - 1);
    const CycNum g = gauss_defect(p);
    CHECK(g * g == CycNum::integer(p, d % 2 == 0 ? p : -p));
  }
  CHECK_THROWS_AS(gauss_defect(4), Error);
}

TEST_CASE("SU(2) reduced sums") {
  for (int64_t n : {5, 8, 12}) {
    const auto P = su2_reduced(Su2Manifold::P, n), mP = su2_reduced(Su2Manifold::P, n, true);
    CHECK(P.level == n);
    CHECK(P.value.root_order() == 8 * n);
    CHECK(P.value.denom_exp() == 0);
    CHECK(mP.mirrored);
    CHECK(mP.value == P.value.conj());
    CHECK(su2_reduced(Su2Manifold::Sigma, n, true).value == su2_reduced(Su2Manifold::Sigma, n).value.conj());
  }
  const Theory T8 = Theory::su2(8), T12 = Theory::su2(12);
  CHECK(!phase_equal(T8, su2_reduced(Su2Manifold::P, 8).value, su2_reduced(Su2Manifold::Sigma, 8).value));
  const CycNum x = su2_reduced(Su2Manifold::P, 12).value;
  CHECK(!phase_equal(T12, x, x.conj()));
  // Neither homology sphere looks like S3 at these levels.
  CHECK(!su2_sphere_witness(su2_reduced(Su2Manifold::P, 8)));
  CHECK(!su2_sphere_witness(su2_reduced(Su2Manifold::P, 12)));
  CHECK(!su2_sphere_witness(su2_reduced(Su2Manifold::Sigma, 16)));
}
