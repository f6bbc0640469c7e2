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
 * @file acceptance.hpp
 * @brief The twelve acceptance criteria, shared by `qcong accept` and the
 * acceptance test binary.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcong {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

std::vector<CriterionResult> run_acceptance(uint64_t seed);
/// "[PASS] 3 phase relations: ..." style line.
std::string format_criterion(const CriterionResult& c);

}  // namespace qcong
