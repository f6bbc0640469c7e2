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
 * @file obstruct.hpp
 * @brief Phase tests, h-adic truncation and allowed-modulus screening.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcong/cyclotomic.hpp"
#include "qcong/theory.hpp"

namespace qcong {

/// x = sign * kappa^m * y.
struct PhaseWitness {
  int sign = 1;
  int64_t m = 0;
  bool operator==(const PhaseWitness&) const = default;
};

/// Smallest m in [0, kappa_order), + before -, or nullopt.
std::optional<PhaseWitness> phase_equal(const Theory& T, const CycNum& x, const CycNum& y);

/// Element of Z_p[h]/(h^k); coefficients are residues in [0, p).
struct TruncPoly {
  int64_t p = 0;
  int64_t k = 0;
  std::vector<int64_t> coeffs;
  bool operator==(const TruncPoly&) const = default;
  std::string to_string() const;
};

TruncPoly make_trunc(int64_t p, std::vector<int64_t> coeffs);
TruncPoly trunc_mul(const TruncPoly& x, const TruncPoly& y);

/// Image of x (an element of Z[a], stored at root order p) under a -> 1 - h.
TruncPoly truncate(const CycNum& x, int64_t k);

/// All (j, sign) with truncate(a^j x) == truncate(sign * y).
std::vector<std::pair<int64_t, int>> trunc_compare(const CycNum& x, const CycNum& y, int64_t k);

struct Exclusion {
  int64_t base = 0;
  std::string provenance;
};

struct ScreenReport {
  std::string pair;
  std::vector<Exclusion> exclusions;
  std::optional<int64_t> odd_rule;
  std::vector<int64_t> allowed;
};

/// f in [2, limit] with no excluded base dividing f and no odd divisor >= odd_rule.
/// Throws InfiniteAllowedSet unless an odd rule and a power-of-two base are
/// both present; the default limit then covers the whole allowed set.
ScreenReport screen(std::string pair, std::vector<Exclusion> exclusions, std::optional<int64_t> odd_rule,
                    std::optional<int64_t> limit = std::nullopt);

}  // namespace qcong
