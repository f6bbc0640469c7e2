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
 * @file closedforms.hpp
 * @brief Closed formulas for the Poincare sphere, the Whitehead-link
 * surgery and the SU(2) recoupling sums.
 *
 * Elements of Z[a] are returned at root order r (a = zeta_r); use
 * Theory::from_a to move them into a theory ring.
 */

#pragma once

#include <cstdint>
#include <optional>

#include "qcong/cyclotomic.hpp"

namespace qcong {

/// I_r(P) = (1-a)^{-1} sum_{n=0}^{(r-3)/2} a^n prod_{k=n+1}^{2n+1} (1-a^k).
CycNum le_poincare(int64_t r);

/// I_p(W) = (1-a)^{-1} sum_{i=1}^{d} (1 - a^{i^2}).
CycNum whitehead_norm(int64_t p);

/// sum_{i=0}^{p-1} (1 - a^{i^2}) - p, i.e. minus the quadratic Gauss sum.
CycNum gauss_defect(int64_t p);

enum class Su2Manifold { P, Sigma };

struct ReducedSU2 {
  int64_t level = 0;
  CycNum value;  // root order 8n
  Su2Manifold which = Su2Manifold::P;
  bool mirrored = false;
};

/// The recoupling double sum with the kappa * eta^2 prefactor removed.
/// `mirrored` returns the complex conjugate.
ReducedSU2 su2_reduced(Su2Manifold which, int64_t n, bool mirrored = false);

/// Smallest m with X^2 = kappa^{2m} * sum Delta_c^2, which holds exactly when
/// <M> = +-kappa^{m+1} <S3>.
std::optional<int64_t> su2_sphere_witness(const ReducedSU2& x);

}  // namespace qcong
