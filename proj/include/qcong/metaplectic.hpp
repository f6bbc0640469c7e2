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
 * @file metaplectic.hpp
 * @brief The metaplectic representation of SL(2, Z_p), its odd part, and the
 * SO(3) torus representation it is compared against.
 *
 * Matrices act on column vectors: (W f)(x) = sum_y M[x][y] f(y), so column x
 * holds the image of the basis vector x. Entries live at root order 4p with
 * q = zeta_{4p}^4, matching Theory::so3(p).
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcong/cyclotomic.hpp"

namespace qcong {

/// [[a, b], [c, d]] mod m with ad - bc = 1.
struct SL2 {
  int64_t a = 1, b = 0, c = 0, d = 1;
  int64_t m = 0;

  static SL2 make(int64_t a, int64_t b, int64_t c, int64_t d, int64_t m);
  static SL2 identity(int64_t m) { return make(1, 0, 0, 1, m); }
  static SL2 S(int64_t m) { return make(0, 1, -1, 0, m); }
  static SL2 T(int64_t m) { return make(1, 0, 1, 1, m); }
  /// diag(n^{-1}, n).
  static SL2 U(int64_t n, int64_t m);

  SL2 operator*(const SL2& o) const;
  bool operator==(const SL2&) const = default;
  std::string to_string() const;
};

enum class Gen { S, T, TInv };
using Word = std::vector<Gen>;

std::string word_to_string(const Word& w);
SL2 word_matrix(const Word& w, int64_t m);

/// Some word in S, T, T^{-1} whose product is g (m prime).
Word sl2_decompose(const SL2& g);

enum class Basis { Delta, OddDelta, TqftB };

class RepMatrix {
 public:
  RepMatrix() = default;
  RepMatrix(size_t n, int64_t root_order, Basis basis);
  static RepMatrix identity(size_t n, int64_t root_order, Basis basis);

  size_t size() const { return n_; }
  int64_t root_order() const { return N_; }
  Basis basis() const { return basis_; }
  CycNum& at(size_t row, size_t col) { return entries_[row * n_ + col]; }
  const CycNum& at(size_t row, size_t col) const { return entries_[row * n_ + col]; }

  RepMatrix operator*(const RepMatrix& o) const;
  RepMatrix scaled(const CycNum& s) const;
  /// Equality of entries (basis tags ignored).
  bool same_entries(const RepMatrix& o) const;
  /// Exactly one nonzero entry per row and column, each +1 or -1.
  bool is_signed_permutation() const;

 private:
  size_t n_ = 0;
  int64_t N_ = 1;
  Basis basis_ = Basis::Delta;
  std::vector<CycNum> entries_;
};

enum class WGen { S, T, U };

/// W(S), W(T) or W(U(n)) on C[Z_p] in the delta basis. Throws BadPrime for
/// p < 5 or composite p.
RepMatrix w_gen(int64_t p, WGen gen, int64_t n = 1);
/// Left-multiplies M by one generator without a dense product.
RepMatrix apply_gen(int64_t p, Gen g, const RepMatrix& M);
/// Product of generator matrices along the word.
RepMatrix w_word(int64_t p, const Word& w);
RepMatrix w_of(int64_t p, const SL2& g);

int64_t legendre(int64_t n, int64_t p);

/// Restriction to odd functions in the basis delta'_x = delta_x - delta_{-x}, 1 <= x <= d.
RepMatrix odd_part(const RepMatrix& M);

enum class TorusGen { S, T };
/// Z(S) or Z(T) of the so3:p theory in the basis b_1..b_d.
RepMatrix tqft_torus(int64_t p, TorusGen gen);

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view status_name(CheckStatus s);

struct MetaplecticReport {
  std::string check;
  int64_t p = 0;
  CheckStatus status = CheckStatus::Pass;
  std::optional<std::string> counterexample;
  std::optional<uint64_t> seed;
  std::vector<std::string> details;
};

MetaplecticReport verify_factor(int64_t p);
MetaplecticReport verify_congruence_property(int64_t p);
/// w_of(g) w_of(h) == w_of(gh) on `pairs` random pairs, plus S^4 = 1 and
/// (ST)^3 = S^2.
MetaplecticReport verify_homomorphism(int64_t p, uint64_t seed, int pairs = 100);
/// w_of(U(n)) == w_gen(U(n)) for every unit n.
MetaplecticReport verify_legendre_words(int64_t p);

}  // namespace qcong
