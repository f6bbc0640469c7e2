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
 * @file commands.hpp
 * @brief The subcommands behind the qcong CLI.
 *
 * Manifold names accepted by compare and screen: P, Sigma, S3, W,
 * lens:<n>/<l>, or any plumbing description. A leading '-' mirrors.
 * Input problems surface as qcong::Error; the CLI maps them to exit code 2.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/obstruct.hpp"
#include "qcong/plumbing.hpp"
#include "qcong/report.hpp"
#include "qcong/theory.hpp"

namespace qcong {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;

struct CommandOutcome {
  int exit_code = kExitOk;
  Report report;
};

/// H(0,-2,3,5).
PlumbingTree poincare_sphere();
/// H(0,2,-3,-7).
PlumbingTree brieskorn_sigma();

struct ManifoldName {
  std::string name;
  bool mirrored = false;
};
ManifoldName parse_manifold_name(std::string_view s);

/// Plumbing for P, Sigma, S3, lens:<n>/<l> or a description; nullopt for W.
std::optional<PlumbingTree> manifold_tree(std::string_view name);
/// <M> in an SO(3) theory.
CycNum so3_value(const Theory& T, const ManifoldName& m);

/// SU(2) comparison of P, Sigma, S3 and their mirrors via the recoupling sums.
std::optional<PhaseWitness> su2_compare(int64_t n, const ManifoldName& left, const ManifoldName& right);

CommandOutcome cmd_invariant(const std::string& theory, const std::string& desc);
CommandOutcome cmd_normalized(const std::string& theory, const std::string& desc);
CommandOutcome cmd_compare(const std::string& theory, const std::string& left, const std::string& right,
                           bool mirror_right);
CommandOutcome cmd_truncate(int64_t p, int64_t k, const std::string& expr);

struct ScreenCheck {
  std::string what;
  bool ok = false;
  std::string detail;
};

struct ScreenRun {
  ScreenReport report;
  std::string odd_rule_provenance;
  std::vector<ScreenCheck> checks;
  bool verified() const;
};

std::string default_screen_config();
/// Loads the pair's rules from the config, recomputes every computed
/// exclusion and odd-rule spot check, then screens.
ScreenRun run_screen(const std::string& pair, const std::string& config_path);
CommandOutcome cmd_screen(const std::string& pair, const std::string& config_path);

/// check is factor, congruence, homomorphism, legendre or all.
CommandOutcome cmd_metaplectic(const std::string& check, int64_t p, uint64_t seed, int pairs);

std::string default_script_dir();
CommandOutcome cmd_replay(const std::string& script, const std::string& theories);

}  // namespace qcong
