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

#include <cstdlib>
#include <iostream>

#include "qcong/acceptance.hpp"
#include "qcong/report.hpp"

int main() {
  const auto results = qcong::run_acceptance(qcong::seed_from_env(20261015));
  int failed = 0;
  for (const auto& c : results) {
    std::cout << qcong::format_criterion(c) << std::endl;
    failed += c.pass ? 0 : 1;
  }
  std::cout << results.size() - failed << "/" << results.size() << " criteria pass" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
