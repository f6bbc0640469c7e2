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

#include "doctest.h"
#include "qcong/closedforms.hpp"
#include "qcong/error.hpp"
#include "qcong/obstruct.hpp"
#include "qcong/plumbing.hpp"
#include "test_support.hpp"

using namespace qcong;

namespace {

// Signature by cyclic Jacobi rotations on doubles.
int jacobi_signature(const std::vector<std::vector<BigInt>>& m) {
  const size_t n = m.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j].get_d();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-20) break;
    for (size_t p = 0; p < n; ++p)
      for (size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1 : -1) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  int sig = 0;
  for (size_t i = 0; i < n; ++i) sig += a[i][i] > 1e-9 ? 1 : (a[i][i] < -1e-9 ? -1 : 0);
  return sig;
}

PlumbingTree random_tree(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> size(1, max_vertices), label(-4, 4);
  PlumbingTree t;
  const int n = size(rng);
  for (int v = 0; v < n; ++v) {
    t.add_vertex(BigRat(label(rng)));
    if (v > 0) t.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  }
  return t;
}

}  // namespace

TEST_CASE("parse and print") {
  const PlumbingTree P = parse_plumbing("H(0,-2,3,5)");
  CHECK(P.size() == 4);
  CHECK(P.edges().size() == 3);
  CHECK(P.degree(0) == 3);
  CHECK(P.to_string() == "H(0,-2,3,5)");
  CHECK(parse_plumbing(" C( 1 , 2 ,3, 4 ) ").to_string() == "C(1,2,3,4)");
  CHECK(parse_plumbing("C(1,2,3)").to_string() == "H(2,1,3)");
  CHECK(parse_plumbing("U(7/2) + U(-1)").to_string() == "U(7/2) + U(-1)");
  CHECK(parse_plumbing("H(0,2[c=1])").vertex(1).color == std::optional<int64_t>(1));
  CHECK(parse_plumbing("S3").empty());
  CHECK(parse_plumbing("U(4/-2)").vertex(0).label == -2);
  try {
    parse_plumbing("U(1/0)");
    FAIL("expected ZeroDenominator");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroDenominator);
  }
  for (const char* bad : {"", "H(", "H(1,2", "X(1)", "U(1,2)", "U(a)", "H(1)+", "C(1,2)]"}) {
    CHECK_THROWS_AS(parse_plumbing(bad), Error);
  }
}

TEST_CASE("tree editing") {
  PlumbingTree t = parse_plumbing("C(1,2,3)");
  CHECK_THROWS_AS(t.add_edge(0, 2), Error);
  t.remove_vertex(1);
  CHECK(t.size() == 2);
  CHECK(t.edges().empty());
  CHECK(t.index_of(2) == std::optional<size_t>(1));
  CHECK(!t.index_of(1));
  CHECK(t.components().size() == 2);
}

TEST_CASE("continued fractions") {
  CHECK(negative_continued_fraction(BigRat(7, 2)) == std::vector<BigInt>{4, 2});
  CHECK(negative_continued_fraction(BigRat(-5)) == std::vector<BigInt>{-5});
  std::mt19937_64 rng(qcong::testing::test_seed());
  std::uniform_int_distribution<int> num(-60, 60), den(1, 25);
  for (int k = 0; k < 200; ++k) {
    BigRat x(num(rng), den(rng));
    x.canonicalize();
    const auto cf = negative_continued_fraction(x);
    BigRat back(cf.back());
    for (size_t i = cf.size() - 1; i-- > 0;) back = BigRat(cf[i]) - 1 / back;
    CHECK(back == x);
  }
}

TEST_CASE("signature against Jacobi eigenvalues") {
  std::mt19937_64 rng(qcong::testing::test_seed());
  for (int k = 0; k < 60; ++k) {
    const PlumbingTree t = random_tree(rng, 7);
    CHECK(signature(t) == jacobi_signature(linking_matrix(t)));
  }
  CHECK(signature(parse_plumbing("H(0,-2,3,5)")) == jacobi_signature(linking_matrix(parse_plumbing("H(0,-2,3,5)"))));
  CHECK(signature(parse_plumbing("U(0)")) == 0);
  CHECK(linking_matrix(parse_plumbing("H(0,1[c=2],3)")).size() == 2);
}

TEST_CASE("invariance under Kirby moves") {
  std::mt19937_64 rng(qcong::testing::test_seed() + 1);
  for (int64_t r : {5, 7}) {
    const Theory T = Theory::so3(r);
    for (int k = 0; k < 12; ++k) {
      const PlumbingTree t = random_tree(rng, 5);
      const CycNum base = invariant(T, t);
      // Blow up an epsilon leaf at a random vertex.
      const size_t v = std::uniform_int_distribution<size_t>(0, t.size() - 1)(rng);
      for (int eps : {1, -1}) {
        PlumbingTree u = t;
        u.vertex(v).label += eps;
        u.add_edge(v, u.add_vertex(BigRat(eps)));
        CHECK(invariant(T, u) == base);
      }
      // Disjoint union with a free unknot.
      PlumbingTree w = t;
      w.append(parse_plumbing("U(-1)"));
      CHECK(invariant(T, w) == base);
      // Mirror is complex conjugation.
      CHECK(invariant(T, mirror(t)) == base.conj());
      // Connected sum multiplies normalized invariants.
      PlumbingTree both = t;
      both.append(parse_plumbing("H(0,-2,3,5)"));
      CHECK(normalized(T, both) == normalized(T, t) * normalized(T, parse_plumbing("H(0,-2,3,5)")));
    }
  }
}

TEST_CASE("rational labels") {
  for (int64_t r : {5, 7, 9}) {
    const Theory T = Theory::so3(r);
    CHECK(invariant(T, parse_plumbing("U(7/2)")) == invariant(T, parse_plumbing("C(4,2)")));
    CHECK(invariant(T, parse_plumbing("H(0,5/3,-2)")) == invariant(T, expand_rational(parse_plumbing("H(0,5/3,-2)"))));
    // Rolfsen twist: U(n/l) and U(n/(l + n)) are the same lens space up to orientation-preserving homeomorphism.
    const CycNum x = invariant(T, parse_plumbing("U(4/3)")), y = invariant(T, parse_plumbing("U(4/7)"));
    REQUIRE(!y.is_zero());
    CHECK(phase_equal(T, x, y).has_value());
  }
}

TEST_CASE("TQFT normalizations") {
  for (int64_t r : {3, 5, 7, 9}) {
    const Theory T = Theory::so3(r);
    CHECK(invariant(T, parse_plumbing("U(0)")) == CycNum::one(T.root_order()));
    CHECK(invariant(T, parse_plumbing("S3")) == T.eta());
    CHECK(invariant(T, parse_plumbing("H(0,0)")) == T.eta());
    CHECK(invariant(T, parse_plumbing("U(1)")) == T.eta());
    CHECK(normalized(T, parse_plumbing("S3")) == CycNum::one(T.root_order()));
  }
}

TEST_CASE("Poincare sphere against the closed formula") {
  for (int64_t p : {5, 7, 11, 13}) {
    const Theory T = Theory::so3(p);
    const auto w = phase_equal(T, invariant(T, parse_plumbing("H(0,-2,3,5)")), T.eta() * T.from_a(le_poincare(p)));
    REQUIRE(w.has_value());
    CHECK(*w == PhaseWitness{1, 0});
  }
}

TEST_CASE("SU(2) surgery sums against recoupling sums") {
  // <M> = kappa^{-sigma} eta^{1+s} S; squaring removes the unknown eta.
  for (int64_t n : {5, 6}) {
    const Theory T = Theory::su2(n);
    CycNum D = CycNum::zero(T.root_order());
    for (int64_t c : T.colors()) D += T.delta(c) * T.delta(c);
    const struct {
      const char* desc;
      Su2Manifold which;
    } cases[] = {{"H(0,-2,3,5)", Su2Manifold::P}, {"H(0,2,-3,-7)", Su2Manifold::Sigma}};
    for (const auto& c : cases) {
      const CycNum s = surgery_sum(T, expand_rational(parse_plumbing(c.desc)));
      const CycNum X = su2_reduced(c.which, n).value;
      CHECK(phase_equal(T, s * s, X * X * D * D * D).has_value());
    }
  }
}

TEST_CASE("colorprime instances") {
  const auto a = colorprime_check(Theory::so3(5), parse_plumbing("U(-1)"), 0, 2, 5);
  CHECK(a.n_hat == 2);
  CHECK(a.color == 1);
  CHECK(a.witness.has_value());
  const auto b = colorprime_check(Theory::so3(7), parse_plumbing("H(0,-2,3,5)"), 1, 2, 7);
  CHECK(b.n_hat == 3);
  CHECK(b.color == 2);
  CHECK(b.witness.has_value());
  std::mt19937_64 rng(qcong::testing::test_seed() + 2);
  for (int k = 0; k < 8; ++k) {
    const PlumbingTree t = random_tree(rng, 3);
    for (int64_t n : {1, 2, 4, 5, 8}) {
      const auto rep = colorprime_check(Theory::so3(7), t, 0, n, k % 2 == 0 ? 7 : 21);
      CHECK(rep.witness.has_value());
    }
  }
}
