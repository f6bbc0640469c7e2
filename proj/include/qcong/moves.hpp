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
 * @file moves.hpp
 * @brief Mod-f congruence moves on plumbing forests and script replay.
 *
 * Vertices are addressed by their stable ids (`v<k>` in scripts). Script
 * format, one item per line, `#` starts a comment:
 *
 *     f=<int>
 *     start=<desc>
 *     shift v<k> <delta>
 *     blowdown v<k>
 *     blowup v<k> +1|-1
 *     drop v<k>
 *     split v<k>
 *     join <label> v<a> v<b> ...
 *     check <desc>
 *     end=<desc>
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcong/obstruct.hpp"
#include "qcong/plumbing.hpp"
#include "qcong/theory.hpp"

namespace qcong {

enum class MoveKind { FrameShift, BlowDown, BlowUpLeaf, DropFreeUnknot, SplitZeroLeaf, JoinZeroPair, RelabelModCheck };

struct Move {
  MoveKind kind = MoveKind::FrameShift;
  /// Vertex ids the move acts on (join takes several).
  std::vector<int64_t> vertices;
  /// Shift amount, blowup sign, or the new center's label for join.
  BigInt amount;
  /// RelabelModCheck target.
  std::optional<PlumbingTree> target;
  std::string text;
};

struct MoveScript {
  int64_t f = 0;
  PlumbingTree start;
  std::vector<Move> steps;
  PlumbingTree claimed_end;
};

/// Vertex map a -> b matching shapes and colors, with labels equal mod f.
std::optional<std::vector<size_t>> match_mod(const PlumbingTree& a, const PlumbingTree& b, int64_t f);

/// Throws IllegalMove on an illegal step.
PlumbingTree apply(const PlumbingTree& t, const Move& m, int64_t f);

Move parse_move(std::string_view line);
MoveScript parse_script(std::string_view text);
MoveScript load_script(const std::string& path);
std::string script_to_string(const MoveScript& s);
/// The same chain for the mirrored manifolds.
MoveScript mirror_script(const MoveScript& s);

struct ReplayCheck {
  std::string theory;
  bool compatible = false;
  std::optional<CycNum> start_value;
  std::optional<CycNum> end_value;
  std::optional<PhaseWitness> witness;
};

struct ReplayReport {
  int64_t f = 0;
  std::vector<std::string> trace;
  std::vector<ReplayCheck> checks;
  /// Every compatible theory produced a witness.
  bool verified() const;
};

/// Throws StepFailed with the failing step index. A theory is compatible when
/// it is so3:r with r | f.
ReplayReport replay(const MoveScript& script, const std::vector<Theory>& theories);

}  // namespace qcong
