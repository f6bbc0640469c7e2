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

#include "qcong/report.hpp"

#include <cstdlib>

#include "qcong/error.hpp"

namespace qcong {

namespace {

std::string str(int64_t v) { return std::to_string(v); }

BigInt big_from(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string()) throw Error(Errc::ParseError, std::string("missing string field ") + field);
  BigInt out;
  if (out.set_str(j[field].get<std::string>(), 10) != 0) throw Error(Errc::ParseError, std::string("bad integer in ") + field);
  return out;
}

}  // namespace

Json to_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"root_order", str(x.root_order())},
              {"denom_exp", str(x.denom_exp())},
              {"base", x.denom_base().get_str()},
              {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "ring element must be an object");
  const BigInt N = big_from(j, "root_order"), e = big_from(j, "denom_exp"), base = big_from(j, "base");
  if (!N.fits_slong_p() || N < 1 || !e.fits_slong_p() || e < 0) throw Error(Errc::ParseError, "root_order or denom_exp out of range");
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw Error(Errc::ParseError, "missing coeffs");
  std::vector<BigInt> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw Error(Errc::ParseError, "coefficients must be strings");
    BigInt v;
    if (v.set_str(c.get<std::string>(), 10) != 0) throw Error(Errc::ParseError, "bad coefficient");
    coeffs.push_back(v);
  }
  const int64_t order = N.get_si();
  if (static_cast<int64_t>(coeffs.size()) != euler_phi(order)) throw Error(Errc::ParseError, "coefficient count does not match phi(root_order)");
  return CycNum::from_coeffs(order, std::move(coeffs), e.get_si(), base);
}

Json to_json(const std::optional<PhaseWitness>& w) {
  if (!w) return nullptr;
  return Json{{"sign", w->sign > 0 ? "+" : "-"}, {"m", str(w->m)}};
}

Json to_json(const TruncPoly& t) {
  Json coeffs = Json::array();
  for (int64_t c : t.coeffs) coeffs.push_back(str(c));
  return Json{{"p", str(t.p)}, {"k", str(t.k)}, {"coeffs", coeffs}, {"text", t.to_string()}};
}

Json to_json(const ScreenReport& s) {
  Json ex = Json::array();
  for (const auto& e : s.exclusions) ex.push_back(Json{{"base", str(e.base)}, {"provenance", e.provenance}});
  Json allowed = Json::array();
  for (int64_t f : s.allowed) allowed.push_back(str(f));
  return Json{{"pair", s.pair},
              {"exclusions", ex},
              {"odd_rule", s.odd_rule ? Json(str(*s.odd_rule)) : Json(nullptr)},
              {"allowed", allowed}};
}

Json to_json(const ReplayReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"theory", c.theory}, {"compatible", c.compatible}};
    if (c.compatible) {
      j["start"] = to_json(*c.start_value);
      j["end"] = to_json(*c.end_value);
      j["witness"] = to_json(c.witness);
    }
    checks.push_back(j);
  }
  return Json{{"f", str(r.f)}, {"trace", r.trace}, {"checks", checks}, {"verified", r.verified()}};
}

Json to_json(const MetaplecticReport& r) {
  Json j{{"check", r.check}, {"p", str(r.p)}, {"status", std::string(status_name(r.status))}};
  j["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
  j["seed"] = r.seed ? Json(std::to_string(*r.seed)) : Json(nullptr);
  j["details"] = r.details;
  return j;
}

Json to_json(const ColorprimeReport& r) {
  return Json{{"n", str(r.n)},           {"ell", str(r.ell)},
              {"n_hat", str(r.n_hat)},   {"color", str(r.color)},
              {"surgered", to_json(r.surgered)}, {"colored", to_json(r.colored)},
              {"witness", to_json(r.witness)}};
}

Json Report::to_json() const {
  Json j{{"command", command}, {"inputs", inputs}, {"outputs", outputs}, {"witnesses", witnesses}};
  j["timings"] = Json{{"elapsed_ms", elapsed_ms}};
  j["version"] = kVersion;
  if (seed) j["seed"] = std::to_string(*seed);
  return j;
}

uint64_t seed_from_env(uint64_t fallback) {
  const char* env = std::getenv("QCONG_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  return *end == '\0' ? static_cast<uint64_t>(v) : fallback;
}

}  // namespace qcong
