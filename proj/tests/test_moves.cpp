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


#include <filesystem>

#include "doctest.h"
#include "qcong/commands.hpp"
#include "qcong/error.hpp"
#include "qcong/moves.hpp"
#include "test_support.hpp"

using namespace qcong;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

std::vector<MoveScript> bundled_scripts() {
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(default_script_dir()))
    if (e.path().extension() == ".qcs") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  std::vector<MoveScript> out;
  for (const auto& p : paths) out.push_back(load_script(p.string()));
  return out;
}

}  // namespace

TEST_CASE("move examples") {
  const PlumbingTree t = parse_plumbing("H(0,0,1,-1)");
  const PlumbingTree u = apply(apply(t, parse_move("blowdown v2"), 2), parse_move("blowdown v3"), 2);
  CHECK(u.to_string() == "H(0,0)");
  CHECK(match_mod(parse_plumbing("H(0,-2,3,5)"), parse_plumbing("H(0,1,3,-1)"), 3).has_value());
  CHECK(!match_mod(parse_plumbing("H(0,-2,3,5)"), parse_plumbing("H(0,1,3,0)"), 3));
  CHECK(!match_mod(parse_plumbing("H(0,-2,3,5)"), parse_plumbing("C(0,-2,3,5)"), 3));
  CHECK(apply(parse_plumbing("H(0,-2,3,5)"), parse_move("check H(0,1,3,-1)"), 3).to_string() == "H(0,1,3,-1)");
  CHECK(code_of([&] { apply(t, parse_move("shift v0 5"), 2); }) == Errc::IllegalMove);
  CHECK(code_of([&] { apply(t, parse_move("blowdown v0"), 2); }) == Errc::IllegalMove);
  CHECK(code_of([&] { apply(t, parse_move("blowdown v9"), 2); }) == Errc::IllegalMove);
  CHECK(code_of([&] { apply(t, parse_move("drop v2"), 2); }) == Errc::IllegalMove);
  CHECK(code_of([&] { apply(t, parse_move("check H(0,1,1,-1)"), 2); }) == Errc::IllegalMove);
  CHECK(apply(parse_plumbing("U(1) + U(3)"), parse_move("drop v0"), 2).to_string() == "U(3)");
}

TEST_CASE("inverse moves") {
  std::mt19937_64 rng(qcong::testing::test_seed());
  std::uniform_int_distribution<int> label(-4, 4), mult(-3, 3);
  for (int k = 0; k < 50; ++k) {
    PlumbingTree t;
    const int n = 1 + k % 5;
    for (int v = 0; v < n; ++v) {
      t.add_vertex(BigRat(label(rng)));
      if (v > 0) t.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    }
    const int64_t f = 2 + k % 4;
    const std::string v = "v" + std::to_string(std::uniform_int_distribution<int>(0, n - 1)(rng));
    const int64_t delta = f * mult(rng);
    const PlumbingTree shifted = apply(t, parse_move("shift " + v + " " + std::to_string(delta)), f);
    CHECK(apply(shifted, parse_move("shift " + v + " " + std::to_string(-delta)), f).to_string() == t.to_string());
    for (const char* sign : {"+1", "-1"}) {
      const PlumbingTree up = apply(t, parse_move(std::string("blowup ") + v + " " + sign), f);
      CHECK(up.size() == t.size() + 1);
      const PlumbingTree down = apply(up, parse_move("blowdown v" + std::to_string(n)), f);
      CHECK(down.to_string() == t.to_string());
      CHECK(invariant(Theory::so3(5), up) == invariant(Theory::so3(5), t));
    }
  }
}

TEST_CASE("script parsing") {
  const MoveScript s = parse_script("# comment\nf=3\nstart=H(0,-2,3,5)\n\ncheck H(0,1,3,-1)  # inline\nblowdown v1\nend=S3\n");
  CHECK(s.f == 3);
  CHECK(s.steps.size() == 2);
  CHECK(s.steps[0].kind == MoveKind::RelabelModCheck);
  CHECK(s.steps[1].kind == MoveKind::BlowDown);
  CHECK(s.claimed_end.empty());
  CHECK(parse_script(script_to_string(s)).steps.size() == 2);
  const Move j = parse_move("join -2 v4 v5");
  CHECK(j.kind == MoveKind::JoinZeroPair);
  CHECK(j.amount == -2);
  CHECK(j.vertices == std::vector<int64_t>{4, 5});
  for (const char* bad : {"", "twist v1", "blowdown", "blowdown 1", "shift v1", "join 0", "blowup v1 2"})
    CHECK_THROWS_AS(parse_move(bad), Error);
  CHECK_THROWS_AS(parse_script("start=S3\nend=S3\n"), Error);
  CHECK_THROWS_AS(parse_script("f=2\nstart=S3\n"), Error);
  CHECK_THROWS_AS(parse_script("f=1\nstart=S3\nend=S3\n"), Error);
  CHECK_THROWS_AS(load_script("/nonexistent/script.qcs"), Error);
}

TEST_CASE("replay failures") {
  const std::vector<Theory> th{Theory::so3(3)};
  MoveScript bad = parse_script("f=3\nstart=H(0,-2,3,5)\ncheck H(0,1,3,0)\nend=H(0,1,3,0)\n");
  CHECK(code_of([&] { replay(bad, th); }) == Errc::StepFailed);
  MoveScript wrong_end = parse_script("f=3\nstart=H(0,-2,3,5)\ncheck H(0,1,3,-1)\nend=S3\n");
  CHECK(code_of([&] { replay(wrong_end, th); }) == Errc::StepFailed);
}

TEST_CASE("bundled chains replay with witnesses") {
  const std::vector<Theory> th{Theory::so3(3), Theory::so3(5), Theory::so3(7)};
  const auto scripts = bundled_scripts();
  CHECK(scripts.size() == 8);
  for (const MoveScript& s : scripts) {
    for (const MoveScript& variant : {s, mirror_script(s)}) {
      const ReplayReport rep = replay(variant, th);
      CHECK(rep.f == s.f);
      CHECK(rep.trace.size() >= variant.steps.size());
      CHECK(rep.verified());
      for (const ReplayCheck& c : rep.checks) {
        const bool expect = s.f % (c.theory == "so3:3" ? 3 : c.theory == "so3:5" ? 5 : 7) == 0;
        CHECK(c.compatible == expect);
        if (c.compatible) CHECK(c.witness.has_value());
      }
    }
  }
}

TEST_CASE("P to -P at f = 5") {
  MoveScript s = load_script(default_script_dir() + "/p_f5.qcs");
  const Theory T = Theory::so3(5);
  const ReplayReport rep = replay(s, {T});
  REQUIRE(rep.checks.size() == 1);
  REQUIRE(rep.checks[0].witness);
  const PhaseWitness w = *rep.checks[0].witness;
  CHECK((w.sign > 0 ? T.kappa().pow(w.m) : -T.kappa().pow(w.m)) == T.a().pow(3));
  // At r = 3 every homology sphere has invariant +-1.
  const Theory T3 = Theory::so3(3);
  const CycNum i3 = normalized(T3, parse_plumbing("H(0,-2,3,5)"));
  CHECK((i3 == CycNum::one(12) || i3 == CycNum::integer(12, -1)));
}
