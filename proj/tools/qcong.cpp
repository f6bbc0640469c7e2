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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qcong/acceptance.hpp"
#include "qcong/commands.hpp"
#include "qcong/error.hpp"

namespace {

constexpr uint64_t kDefaultSeed = 20261015;

int emit(const qcong::CommandOutcome& out) {
  std::cout << out.report.to_json().dump(2) << "\n";
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcong: quantum invariants and congruences of 3-manifolds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qcong::kVersion));

  std::string theory, desc, left, right, expr, pair, config, check = "all", script, theories = "so3:3,so3:5,so3:7";
  int64_t p = 0, k = 0;
  int pairs = 100;
  uint64_t seed = qcong::seed_from_env(kDefaultSeed);
  bool mirror_right = false;

  auto* inv = app.add_subcommand("invariant", "<M> for so3, the reduced sum for su2");
  inv->add_option("--theory", theory, "so3:<r> or su2:<n>")->required();
  inv->add_option("--desc", desc, "plumbing description")->required();

  auto* norm = app.add_subcommand("normalized", "I_r(M) = <M> / <S3>");
  norm->add_option("--theory", theory, "so3:<r>")->required();
  norm->add_option("--desc", desc, "plumbing description")->required();

  auto* cmp = app.add_subcommand("compare", "phase witness between two manifolds");
  cmp->add_option("--theory", theory, "so3:<r> or su2:<n>")->required();
  cmp->add_option("--left", left, "P, Sigma, S3, W, lens:<n>/<l> or a description")->required();
  cmp->add_option("--right", right, "as --left")->required();
  cmp->add_flag("--mirror-right", mirror_right, "mirror the right manifold");

  auto* tr = app.add_subcommand("truncate", "h-adic truncation mod p");
  tr->add_option("--p", p, "odd prime")->required();
  tr->add_option("--k", k, "number of coefficients, at most p-1")->required();
  tr->add_option("--expr", expr, "le_poincare, whitehead or desc:<plumbing>")->required();

  auto* scr = app.add_subcommand("screen", "allowed moduli for a pair");
  scr->add_option("--pair", pair, "<name>:<name>, e.g. P:S3 or P:-P")->required();
  scr->add_option("--config", config, "pair configuration (JSON)");

  auto* meta = app.add_subcommand("metaplectic", "metaplectic representation checks");
  meta->add_option("--p", p, "prime >= 5")->required();
  meta->add_option("--check", check, "factor, congruence, homomorphism, legendre or all");
  meta->add_option("--seed", seed, "seed for random pairs");
  meta->add_option("--pairs", pairs, "random pairs for the homomorphism check");

  auto* rep = app.add_subcommand("replay", "replay a congruence move script");
  rep->add_option("--script", script, "script file")->required();
  rep->add_option("--theories", theories, "comma separated theories");

  auto* acc = app.add_subcommand("accept", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qcong::kExitUsage;
  }

  try {
    if (*inv) return emit(qcong::cmd_invariant(theory, desc));
    if (*norm) return emit(qcong::cmd_normalized(theory, desc));
    if (*cmp) return emit(qcong::cmd_compare(theory, left, right, mirror_right));
    if (*tr) return emit(qcong::cmd_truncate(p, k, expr));
    if (*scr) return emit(qcong::cmd_screen(pair, config.empty() ? qcong::default_screen_config() : config));
    if (*meta) return emit(qcong::cmd_metaplectic(check, p, seed, pairs));
    if (*rep) return emit(qcong::cmd_replay(script, theories));
    if (*acc) {
      bool ok = true;
      for (const auto& c : qcong::run_acceptance(seed)) {
        std::cout << qcong::format_criterion(c) << "\n";
        ok = ok && c.pass;
      }
      return ok ? qcong::kExitOk : qcong::kExitRefuted;
    }
  } catch (const qcong::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qcong::kExitUsage;
  }
  return qcong::kExitUsage;
}
