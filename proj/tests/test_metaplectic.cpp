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
#include <complex>
#include <numbers>

#include "doctest.h"
#include "qcong/error.hpp"
#include "qcong/metaplectic.hpp"
#include "qcong/theory.hpp"
#include "test_support.hpp"

using namespace qcong;
using qcong::testing::embed_complex;

namespace {

std::vector<SL2> all_of_sl2(int64_t p) {
  std::vector<SL2> out;
  for (int64_t a = 0; a < p; ++a)
    for (int64_t b = 0; b < p; ++b)
      for (int64_t c = 0; c < p; ++c)
        for (int64_t d = 0; d < p; ++d)
          if (mod_floor(a * d - b * c, p) == 1) out.push_back(SL2::make(a, b, c, d, p));
  return out;
}

}  // namespace

TEST_CASE("generators") {
  const CycNum q = CycNum::zeta(20, 4);
  const RepMatrix T5 = w_gen(5, WGen::T);
  const CycNum diag[] = {CycNum::one(20), q.pow(2), q.pow(3), q.pow(3), q.pow(2)};
  for (size_t x = 0; x < 5; ++x)
    for (size_t y = 0; y < 5; ++y) CHECK(T5.at(x, y) == (x == y ? diag[x] : CycNum::zero(20)));

  for (int64_t p : {5, 7, 11}) {
    CHECK(w_gen(p, WGen::U, 1).same_entries(RepMatrix::identity(p, 4 * p, Basis::Delta)));
    // Numeric check of the S prefactor (-i)^d / sqrt(p).
    const int64_t d = (p - 1) / 2;
    const RepMatrix S = w_gen(p, WGen::S);
    const std::complex<long double> pref =
        std::pow(std::complex<long double>(0, -1), static_cast<int>(d)) / std::sqrt(static_cast<long double>(p));
    for (int64_t x = 0; x < p; ++x)
      for (int64_t y = 0; y < p; ++y) {
        const auto expect = pref * std::polar(1.0L, 2 * std::numbers::pi_v<long double> * x * y / p);
        CHECK(std::abs(embed_complex(S.at(x, y)) - expect) < 1e-9L);
      }
  }
  const RepMatrix U2 = w_gen(5, WGen::U, 2);
  CHECK(U2.is_signed_permutation());
  for (int64_t x = 0; x < 5; ++x) CHECK(U2.at(x, mod_floor(2 * x, 5)) == CycNum::integer(20, -1));
  CHECK(legendre(2, 5) == -1);
  CHECK(legendre(4, 7) == 1);
  CHECK(legendre(3, 7) == -1);
  for (int64_t bad : {3, 4, 9, 15}) {
    try {
      w_gen(bad, WGen::T);
      FAIL("expected BadPrime");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BadPrime);
    }
  }
}

TEST_CASE("decomposition covers SL(2, Z_7)") {
  CHECK(word_to_string(sl2_decompose(SL2::T(7))) == "T");
  CHECK(sl2_decompose(SL2::identity(7)).empty());
  const auto group = all_of_sl2(7);
  CHECK(group.size() == 336);
  for (const SL2& g : group) CHECK(word_matrix(sl2_decompose(g), 7) == g);
  for (int64_t p : {5, 7, 11})
    for (int64_t n = 1; n < p; ++n) CHECK(word_matrix(sl2_decompose(SL2::U(n, p)), p) == SL2::U(n, p));
}

TEST_CASE("true representation") {
  for (int64_t p : {5, 7}) {
    const RepMatrix I = RepMatrix::identity(p, 4 * p, Basis::Delta);
    CHECK(w_of(p, SL2::identity(p)).same_entries(I));
    for (int64_t n = 1; n < p; ++n) CHECK(w_of(p, SL2::U(n, p)).same_entries(w_gen(p, WGen::U, n)));
    const RepMatrix S = w_gen(p, WGen::S), T = w_gen(p, WGen::T);
    CHECK((S * S * S * S).same_entries(I));
    CHECK(((S * T) * (S * T) * (S * T)).same_entries(S * S));
    // Word independence: S^4 and T^p are trivial insertions.
    std::mt19937_64 rng(qcong::testing::test_seed() + p);
    const auto group = all_of_sl2(p);
    std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
    for (int k = 0; k < 15; ++k) {
      const SL2 g = group[pick(rng)], h = group[pick(rng)];
      CHECK((w_of(p, g) * w_of(p, h)).same_entries(w_of(p, g * h)));
      Word w = sl2_decompose(g);
      const RepMatrix base = w_word(p, w);
      Word padded = w;
      padded.insert(padded.begin() + static_cast<std::ptrdiff_t>(pick(rng) % (w.size() + 1)), 4, Gen::S);
      CHECK(w_word(p, padded).same_entries(base));
      Word twisted = w;
      twisted.insert(twisted.begin() + static_cast<std::ptrdiff_t>(pick(rng) % (w.size() + 1)), p, Gen::TInv);
      CHECK(w_word(p, twisted).same_entries(base));
    }
  }
}

TEST_CASE("odd part") {
  for (int64_t p : {5, 7, 11}) {
    const size_t d = static_cast<size_t>((p - 1) / 2);
    CHECK(odd_part(RepMatrix::identity(p, 4 * p, Basis::Delta)).same_entries(RepMatrix::identity(d, 4 * p, Basis::OddDelta)));
    const RepMatrix S = w_gen(p, WGen::S), oS = odd_part(S);
    CHECK(oS.size() == d);
    const CycNum c = S.at(0, 0);
    for (size_t x = 1; x <= d; ++x)
      for (size_t y = 1; y <= d; ++y) {
        const int64_t e = 4 * static_cast<int64_t>(x * y);
        CHECK(oS.at(x - 1, y - 1) == c * (CycNum::zeta(4 * p, e) - CycNum::zeta(4 * p, -e)));
      }
    for (int64_t n = 1; n < p; ++n) CHECK(odd_part(w_gen(p, WGen::U, n)).is_signed_permutation());
    RepMatrix bad = RepMatrix::identity(p, 4 * p, Basis::Delta);
    bad.at(1, 2) = CycNum::one(4 * p);
    try {
      odd_part(bad);
      FAIL("expected NotParityEquivariant");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotParityEquivariant);
    }
  }
}

TEST_CASE("torus representation") {
  const Theory T = Theory::so3(5);
  const RepMatrix Z = tqft_torus(5, TorusGen::T);
  CHECK(Z.size() == 2);
  CHECK(Z.at(0, 0) == CycNum::one(20));
  CHECK(Z.at(1, 1) == (-T.A()).pow(3));
  CHECK(Z.at(0, 1).is_zero());
  for (int64_t p : {5, 7, 11}) {
    const RepMatrix S = tqft_torus(p, TorusGen::S);
    for (size_t i = 0; i < S.size(); ++i)
      for (size_t j = 0; j < S.size(); ++j) CHECK(S.at(i, j) == S.at(j, i));
  }
}

TEST_CASE("verification reports") {
  for (int64_t p : {5, 7}) {
    CHECK(verify_factor(p).status == CheckStatus::Pass);
    const auto cong = verify_congruence_property(p);
    CHECK(cong.status == CheckStatus::Pass);
    CHECK(cong.details.size() == static_cast<size_t>(p - 1));
    const auto hom = verify_homomorphism(p, 7, 10);
    CHECK(hom.status == CheckStatus::Pass);
    CHECK(hom.seed == std::optional<uint64_t>(7));
    CHECK(verify_legendre_words(p).status == CheckStatus::Pass);
  }
  const auto skipped = verify_factor(3);
  CHECK(skipped.status == CheckStatus::Skipped);
  CHECK(status_name(CheckStatus::Skipped) == "skipped");
}
