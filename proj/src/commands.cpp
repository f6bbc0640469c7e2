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

#include "qcong/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "qcong/closedforms.hpp"
#include "qcong/error.hpp"
#include "qcong/metaplectic.hpp"
#include "qcong/moves.hpp"

namespace qcong {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    const size_t at = s.find(sep, start);
    out.emplace_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

int64_t parse_int(std::string_view s, const std::string& what) {
  try {
    size_t used = 0;
    const int64_t v = std::stoll(std::string(s), &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw Error(Errc::ParseError, "bad " + what + ": '" + std::string(s) + "'");
}

int64_t json_int(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return j.get<int64_t>();
  if (j.is_string()) return parse_int(j.get<std::string>(), what);
  throw Error(Errc::ParseError, "expected an integer for " + what);
}

/// sign * kappa^m as a power of a, if it is one.
std::optional<int64_t> witness_as_a_power(const Theory& T, const PhaseWitness& w) {
  CycNum ratio = T.kappa().pow(w.m);
  if (w.sign < 0) ratio = -ratio;
  CycNum ap = CycNum::one(T.root_order());
  for (int64_t j = 0; j < T.a_order(); ++j) {
    if (ap == ratio) return j;
    ap = ap * T.a();
  }
  return std::nullopt;
}

Json witness_json(const Theory& T, const std::optional<PhaseWitness>& w) {
  Json j = to_json(w);
  if (w) {
    CycNum ratio = T.kappa().pow(w->m);
    j["ratio"] = to_json(w->sign > 0 ? ratio : -ratio);
    const auto ja = witness_as_a_power(T, *w);
    j["a_power"] = ja ? Json(std::to_string(*ja)) : Json(nullptr);
  }
  return j;
}

Su2Manifold su2_builtin(const std::string& name) {
  if (name == "P") return Su2Manifold::P;
  if (name == "Sigma") return Su2Manifold::Sigma;
  throw Error(Errc::InvalidArgument, "su2 comparisons support P, Sigma and S3, got '" + name + "'");
}

}  // namespace

PlumbingTree poincare_sphere() { return parse_plumbing("H(0,-2,3,5)"); }
PlumbingTree brieskorn_sigma() { return parse_plumbing("H(0,2,-3,-7)"); }

ManifoldName parse_manifold_name(std::string_view s) {
  ManifoldName out;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  if (!s.empty() && s.front() == '-' && s.size() > 1 && !std::isdigit(static_cast<unsigned char>(s[1]))) {
    out.mirrored = true;
    s.remove_prefix(1);
  }
  out.name = std::string(s);
  if (out.name.empty()) throw Error(Errc::ParseError, "empty manifold name");
  return out;
}

std::optional<PlumbingTree> manifold_tree(std::string_view name) {
  if (name == "P") return poincare_sphere();
  if (name == "Sigma") return brieskorn_sigma();
  if (name == "S3") return PlumbingTree{};
  if (name == "W") return std::nullopt;
  if (name.substr(0, 5) == "lens:") {
    const auto parts = split(name.substr(5), '/');
    if (parts.size() != 2) throw Error(Errc::ParseError, "lens:<n>/<l> expected");
    return parse_plumbing("U(" + parts[0] + "/" + parts[1] + ")");
  }
  return parse_plumbing(name);
}

CycNum so3_value(const Theory& T, const ManifoldName& m) {
  if (T.kind() != TheoryKind::SO3) throw Error(Errc::InvalidArgument, "so3 theory expected");
  if (auto tree = manifold_tree(m.name)) return invariant(T, m.mirrored ? mirror(*tree) : *tree);
  const CycNum w = T.eta() * T.from_a(whitehead_norm(T.level()));
  return m.mirrored ? w.conj() : w;
}

std::optional<PhaseWitness> su2_compare(int64_t n, const ManifoldName& left, const ManifoldName& right) {
  const bool l3 = left.name == "S3", r3 = right.name == "S3";
  if (l3 && r3) return PhaseWitness{1, 0};
  const Theory T = Theory::su2(n);
  if (l3 || r3) {
    const ManifoldName& m = l3 ? right : left;
    const auto w = su2_sphere_witness(su2_reduced(su2_builtin(m.name), n, m.mirrored));
    if (!w) return std::nullopt;
    return PhaseWitness{1, *w};
  }
  const CycNum x = su2_reduced(su2_builtin(left.name), n, left.mirrored).value;
  const CycNum y = su2_reduced(su2_builtin(right.name), n, right.mirrored).value;
  return phase_equal(T, x, y);
}

CommandOutcome cmd_invariant(const std::string& theory, const std::string& desc) {
  const auto t0 = Clock::now();
  const Theory T = Theory::parse(theory);
  const PlumbingTree tree = parse_plumbing(desc);
  CommandOutcome out;
  out.report.command = "invariant";
  out.report.inputs = Json{{"theory", T.name()}, {"desc", tree.to_string()}};
  out.report.outputs["kind"] = T.kind() == TheoryKind::SO3 ? "bracket" : "reduced";
  out.report.outputs["signature"] = std::to_string(signature(expand_rational(tree)));
  out.report.outputs["value"] = to_json(invariant(T, tree));
  out.report.elapsed_ms = ms_since(t0);
  return out;
}

CommandOutcome cmd_normalized(const std::string& theory, const std::string& desc) {
  const auto t0 = Clock::now();
  const Theory T = Theory::parse(theory);
  if (T.kind() != TheoryKind::SO3) throw Error(Errc::InvalidArgument, "normalized needs an so3 theory");
  const PlumbingTree tree = parse_plumbing(desc);
  CommandOutcome out;
  out.report.command = "normalized";
  out.report.inputs = Json{{"theory", T.name()}, {"desc", tree.to_string()}};
  out.report.outputs["value"] = to_json(normalized(T, tree));
  out.report.elapsed_ms = ms_since(t0);
  return out;
}

CommandOutcome cmd_compare(const std::string& theory, const std::string& left, const std::string& right,
                           bool mirror_right) {
  const auto t0 = Clock::now();
  const Theory T = Theory::parse(theory);
  const ManifoldName l = parse_manifold_name(left);
  ManifoldName r = parse_manifold_name(right);
  if (mirror_right) r.mirrored = !r.mirrored;
  CommandOutcome out;
  out.report.command = "compare";
  out.report.inputs = Json{{"theory", T.name()},
                           {"left", (l.mirrored ? "-" : "") + l.name},
                           {"right", (r.mirrored ? "-" : "") + r.name}};
  std::optional<PhaseWitness> w;
  if (T.kind() == TheoryKind::SO3) {
    const CycNum x = so3_value(T, l), y = so3_value(T, r);
    out.report.outputs["left"] = to_json(x);
    out.report.outputs["right"] = to_json(y);
    w = phase_equal(T, x, y);
  } else {
    out.report.outputs["method"] = "recoupling sums";
    w = su2_compare(T.level(), l, r);
  }
  out.report.witnesses.push_back(witness_json(T, w));
  out.exit_code = w ? kExitOk : kExitRefuted;
  out.report.elapsed_ms = ms_since(t0);
  return out;
}

CommandOutcome cmd_truncate(int64_t p, int64_t k, const std::string& expr) {
  const auto t0 = Clock::now();
  if (p < 3 || p % 2 == 0) throw Error(Errc::InvalidArgument, "p must be odd and >= 3");
  if (k < 1 || k > p - 1) throw Error(Errc::TruncationTooDeep, "k must lie in [1, p-1]");
  CycNum x;
  if (expr == "le_poincare") {
    x = le_poincare(p);
  } else if (expr == "whitehead") {
    x = whitehead_norm(p);
  } else if (expr.substr(0, 5) == "desc:") {
    const Theory T = Theory::so3(p);
    const auto tree = manifold_tree(expr.substr(5));
    if (!tree) throw Error(Errc::InvalidArgument, "desc: needs a plumbing");
    x = T.to_a(normalized(T, *tree));
  } else {
    throw Error(Errc::ParseError, "expr must be le_poincare, whitehead or desc:<plumbing>");
  }
  CommandOutcome out;
  out.report.command = "truncate";
  out.report.inputs = Json{{"p", std::to_string(p)}, {"k", std::to_string(k)}, {"expr", expr}};
  out.report.outputs["element"] = to_json(x);
  out.report.outputs["truncation"] = to_json(truncate(x, k));
  out.report.elapsed_ms = ms_since(t0);
  return out;
}

bool ScreenRun::verified() const {
  return std::all_of(checks.begin(), checks.end(), [](const ScreenCheck& c) { return c.ok; });
}

std::string default_screen_config() { return std::string(QCONG_DATA_DIR) + "/screen_pairs.json"; }

namespace {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

std::string describe(const std::optional<PhaseWitness>& w) {
  if (!w) return "no witness";
  return std::string("witness ") + (w->sign > 0 ? "+" : "-") + "kappa^" + std::to_string(w->m);
}

ScreenCheck so3_exclusion(int64_t r, const ManifoldName& l, const ManifoldName& rt, const std::string& what) {
  const Theory T = Theory::so3(r);
  const auto w = phase_equal(T, so3_value(T, l), so3_value(T, rt));
  return ScreenCheck{what, !w, T.name() + ": " + describe(w)};
}

}  // namespace

ScreenRun run_screen(const std::string& pair, const std::string& config_path) {
  const auto names = split(pair, ':');
  if (names.size() != 2) throw Error(Errc::ParseError, "pair must be <name>:<name>");
  const ManifoldName l = parse_manifold_name(names[0]), r = parse_manifold_name(names[1]);
  const Json cfg = load_json(config_path);
  if (!cfg.contains("pairs") || !cfg["pairs"].is_array()) throw Error(Errc::ParseError, "config has no pairs array");
  const auto it = std::find_if(cfg["pairs"].begin(), cfg["pairs"].end(),
                               [&](const Json& e) { return e.value("pair", "") == pair; });
  if (it == cfg["pairs"].end()) throw Error(Errc::InvalidArgument, "pair " + pair + " not in " + config_path);
  const Json& entry = *it;

  ScreenRun run;
  std::vector<Exclusion> exclusions;
  for (const Json& e : entry.at("exclusions")) {
    const int64_t base = json_int(e.at("base"), "base");
    const std::string prov = e.at("provenance").get<std::string>();
    exclusions.push_back({base, prov});
    const auto parts = split(prov, ':');
    if (parts.size() != 3 || parts[0] != "computed") {
      throw Error(Errc::ParseError, "exclusion provenance must be computed:<so3|su2>:<level>, got " + prov);
    }
    const int64_t level = parse_int(parts[2], "level");
    const std::string what = "exclusion " + std::to_string(base);
    if (parts[1] == "su2") {
      if (base != 4 * level) throw Error(Errc::InvalidArgument, "su2:" + parts[2] + " excludes base " + std::to_string(4 * level));
      const auto w = su2_compare(level, l, r);
      run.checks.push_back({what, !w, "su2:" + parts[2] + ": " + describe(w)});
    } else if (parts[1] == "so3") {
      if (base != level) throw Error(Errc::InvalidArgument, "so3:" + parts[2] + " excludes base " + parts[2]);
      run.checks.push_back(so3_exclusion(level, l, r, what));
    } else {
      throw Error(Errc::ParseError, "unknown theory in provenance " + prov);
    }
  }
  std::optional<int64_t> bound;
  if (entry.contains("odd_rule") && !entry["odd_rule"].is_null()) {
    const Json& rule = entry["odd_rule"];
    bound = json_int(rule.at("bound"), "odd_rule bound");
    run.odd_rule_provenance = rule.value("provenance", "");
    for (const Json& s : rule.value("spot_checks", Json::array())) {
      const int64_t rr = json_int(s, "spot check");
      if (rr % 2 == 0 || rr < *bound) throw Error(Errc::InvalidArgument, "spot check " + std::to_string(rr) + " is not an odd r >= bound");
      run.checks.push_back(so3_exclusion(rr, l, r, "odd rule spot check r=" + std::to_string(rr)));
    }
  }
  run.report = screen(pair, std::move(exclusions), bound);
  return run;
}

CommandOutcome cmd_screen(const std::string& pair, const std::string& config_path) {
  const auto t0 = Clock::now();
  const ScreenRun run = run_screen(pair, config_path);
  CommandOutcome out;
  out.report.command = "screen";
  out.report.inputs = Json{{"pair", pair}, {"config", config_path}};
  out.report.outputs["screen"] = to_json(run.report);
  out.report.outputs["odd_rule_provenance"] = run.odd_rule_provenance;
  Json checks = Json::array();
  for (const auto& c : run.checks) checks.push_back(Json{{"what", c.what}, {"ok", c.ok}, {"detail", c.detail}});
  out.report.outputs["checks"] = checks;
  out.exit_code = run.verified() ? kExitOk : kExitRefuted;
  out.report.elapsed_ms = ms_since(t0);
  return out;
}

CommandOutcome cmd_metaplectic(const std::string& check, int64_t p, uint64_t seed, int pairs) {
  const auto t0 = Clock::now();
  std::vector<MetaplecticReport> reports;
  const bool all = check == "all";
  if (!all && check != "factor" && check != "congruence" && check != "homomorphism" && check != "legendre") {
    throw Error(Errc::ParseError, "unknown check '" + check + "'");
  }
  if (all || check == "factor") reports.push_back(verify_factor(p));
  if (all || check == "congruence") reports.push_back(verify_congruence_property(p));
  if (all || check == "homomorphism") reports.push_back(verify_homomorphism(p, seed, pairs));
  if (all || check == "legendre") reports.push_back(verify_legendre_words(p));
  CommandOutcome out;
  out.report.command = "metaplectic";
  out.report.inputs = Json{{"p", std::to_string(p)}, {"check", check}};
  if (all || check == "homomorphism") out.report.seed = seed;
  Json arr = Json::array();
  for (const auto& r : reports) {
    arr.push_back(to_json(r));
    if (r.status == CheckStatus::Fail) out.exit_code = kExitRefuted;
  }
  out.report.outputs["reports"] = arr;
  out.report.elapsed_ms = ms_since(t0);
  return out;
}

std::string default_script_dir() { return std::string(QCONG_DATA_DIR) + "/scripts"; }

CommandOutcome cmd_replay(const std::string& script, const std::string& theories) {
  const auto t0 = Clock::now();
  std::vector<Theory> ts;
  for (const auto& s : split(theories, ',')) {
    if (!s.empty()) ts.push_back(Theory::parse(s));
  }
  const MoveScript ms = load_script(script);
  CommandOutcome out;
  out.report.command = "replay";
  out.report.inputs = Json{{"script", script}, {"theories", theories}};
  try {
    const ReplayReport rep = replay(ms, ts);
    out.report.outputs["replay"] = to_json(rep);
    for (const auto& c : rep.checks) {
      if (c.compatible) out.report.witnesses.push_back(Json{{"theory", c.theory}, {"witness", to_json(c.witness)}});
    }
    out.exit_code = rep.verified() ? kExitOk : kExitRefuted;
  } catch (const Error& e) {
    if (e.code() != Errc::StepFailed) throw;
    out.report.outputs["error"] = e.what();
    out.exit_code = kExitRefuted;
  }
  out.report.elapsed_ms = ms_since(t0);
  return out;
}

}  // namespace qcong
