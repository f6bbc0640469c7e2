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
 * @file report.hpp
 * @brief JSON forms of the library's results. Integers are written as
 * decimal strings.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "qcong/cyclotomic.hpp"
#include "qcong/metaplectic.hpp"
#include "qcong/moves.hpp"
#include "qcong/obstruct.hpp"
#include "qcong/plumbing.hpp"

namespace qcong {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

Json to_json(const CycNum& x);
/// Inverse of to_json(CycNum); throws ParseError on malformed input.
CycNum cycnum_from_json(const Json& j);

Json to_json(const std::optional<PhaseWitness>& w);
Json to_json(const TruncPoly& t);
Json to_json(const ScreenReport& s);
Json to_json(const ReplayReport& r);
Json to_json(const MetaplecticReport& r);
Json to_json(const ColorprimeReport& r);

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  Json witnesses = Json::array();
  double elapsed_ms = 0;
  std::optional<uint64_t> seed;

  Json to_json() const;
};

/// QCONG_SEED if set and numeric, else `fallback`.
uint64_t seed_from_env(uint64_t fallback);

}  // namespace qcong
