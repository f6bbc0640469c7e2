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

#include "qcong/closedforms.hpp"

#include <algorithm>

#include "qcong/error.hpp"
#include "qcong/theory.hpp"

namespace qcong {

namespace {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

}  // namespace

CycNum le_poincare(int64_t r) {
  if (r < 3 || r % 2 == 0) throw Error(Errc::InvalidArgument, "le_poincare needs odd r >= 3");
  const CycNum one = CycNum::one(r);
  CycNum sum = CycNum::zero(r);
  for (int64_t n = 0; n <= (r - 3) / 2; ++n) {
    CycNum term = CycNum::zeta(r, n);
    for (int64_t k = n + 1; k <= 2 * n + 1; ++k) term *= one - CycNum::zeta(r, k);
    sum += term;
  }
  return divide_exact(sum, one - CycNum::zeta(r, 1));
}

CycNum whitehead_norm(int64_t p) {
  if (p < 5 || !is_prime(p)) throw Error(Errc::BadPrime, "whitehead_norm needs a prime p >= 5");
  const CycNum one = CycNum::one(p);
  CycNum sum = CycNum::zero(p);
  for (int64_t i = 1; i <= (p - 1) / 2; ++i) sum += one - CycNum::zeta(p, i * i);
  return divide_exact(sum, one - CycNum::zeta(p, 1));
}

CycNum gauss_defect(int64_t p) {
  if (p < 3 || p % 2 == 0) throw Error(Errc::InvalidArgument, "gauss_defect needs odd p");
  const CycNum one = CycNum::one(p);
  CycNum sum = CycNum::integer(p, -p);
  for (int64_t i = 0; i < p; ++i) sum += one - CycNum::zeta(p, i * i);
  return sum;
}

ReducedSU2 su2_reduced(Su2Manifold which, int64_t n, bool mirrored) {
  const Theory T = Theory::su2(n);
  const int64_t N = T.root_order();
  const bool sigma = which == Su2Manifold::Sigma;
  CycNum total = CycNum::zero(N);
  for (int64_t i = 0; i <= n - 2; ++i) {
    CycNum inner = CycNum::zero(N);
    for (int64_t j = 0; j <= std::min(i, n - 2 - i); ++j) {
      inner += T.delta(2 * j) * T.lam(i, j, sigma ? -1 : 1).pow(3);
    }
    const CycNum theta = T.twist(i);
    total += (sigma ? theta.pow(-4) : theta.pow(2)) * T.delta(i) * inner;
  }
  return ReducedSU2{n, mirrored ? total.conj() : total, which, mirrored};
}

std::optional<int64_t> su2_sphere_witness(const ReducedSU2& x) {
  const Theory T = Theory::su2(x.level);
  CycNum rhs = CycNum::zero(T.root_order());
  for (int64_t c : T.colors()) rhs += T.delta(c) * T.delta(c);
  const CycNum lhs = x.value * x.value;
  for (int64_t m = 0; m < T.kappa_order(); ++m) {
    if (lhs == rhs) return m;
    rhs = rhs.times_zeta(2 * T.kappa_exp());
  }
  return std::nullopt;
}

}  // namespace qcong
