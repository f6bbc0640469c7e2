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
 * @file plumbing.hpp
 * @brief Framed plumbing forests and their SO(3)/SU(2) surgery invariants.
 *
 * Grammar (whitespace ignored):
 *
 *     desc      := component ('+' component)*
 *     component := 'H(' labels ')' | 'C(' labels ')' | 'U(' label ')' [color] | 'S3'
 *     label     := int ['/' int] [color]
 *     color     := '[c=' int ']'
 *
 * H is a star (first label is the center), C a chain, U a single unknot and
 * S3 the empty forest.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcong/cyclotomic.hpp"
#include "qcong/obstruct.hpp"
#include "qcong/theory.hpp"

namespace qcong {

struct PlumbingVertex {
  /// Stable identifier; survives vertex removal.
  int64_t id = 0;
  BigRat label;
  std::optional<int64_t> color;
};

class PlumbingTree {
 public:
  /// Returns the index of the new vertex. A fresh id is assigned unless given.
  size_t add_vertex(const BigRat& label, std::optional<int64_t> color = std::nullopt,
                    std::optional<int64_t> id = std::nullopt);
  /// Throws InvalidArgument if the edge would close a cycle.
  void add_edge(size_t u, size_t v);
  void remove_edge(size_t u, size_t v);
  /// Drops the vertex and its edges; indices above it shift down by one.
  void remove_vertex(size_t index);

  size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<PlumbingVertex>& vertices() const { return vertices_; }
  PlumbingVertex& vertex(size_t i) { return vertices_.at(i); }
  const PlumbingVertex& vertex(size_t i) const { return vertices_.at(i); }
  const std::vector<std::pair<size_t, size_t>>& edges() const { return edges_; }
  bool has_edge(size_t u, size_t v) const;
  std::vector<size_t> neighbors(size_t v) const;
  size_t degree(size_t v) const { return neighbors(v).size(); }
  std::optional<size_t> index_of(int64_t id) const;
  /// Vertex indices grouped by tree component, each ascending, ordered by smallest index.
  std::vector<std::vector<size_t>> components() const;
  bool is_integral() const;

  /// Appends `other` as new components; ids of `other` are renumbered.
  void append(const PlumbingTree& other);

  /// Grammar form when every component is a star or a chain.
  std::string to_string() const;

 private:
  std::vector<PlumbingVertex> vertices_;
  std::vector<std::pair<size_t, size_t>> edges_;
  int64_t next_id_ = 0;
};

PlumbingTree parse_plumbing(std::string_view desc);

/// Negative continued fraction n/l = a1 - 1/(a2 - ... - 1/ak).
std::vector<BigInt> negative_continued_fraction(const BigRat& x);

/// Replaces each rational label by its continued-fraction chain; the first
/// entry stays on the vertex and the rest hang off it as a path.
PlumbingTree expand_rational(const PlumbingTree& t);

/// Over the surgered (uncolored) vertices, in index order.
std::vector<std::vector<BigInt>> linking_matrix(const PlumbingTree& t);
int64_t signature(const PlumbingTree& t);

/// Bracket of the colored framed plumbing link; coloring[v] for every vertex.
CycNum colored_eval(const Theory& T, const PlumbingTree& t, const std::vector<int64_t>& coloring);

/// Sum over colorings of the surgered vertices of (prod Delta) * colored_eval.
CycNum surgery_sum(const Theory& T, const PlumbingTree& t);

/// SO(3): <M>. SU(2): the reduced sum kappa^{-sigma} * surgery_sum.
CycNum invariant(const Theory& T, const PlumbingTree& t);
/// SO(3) only: I_r(M) = <M> / eta.
CycNum normalized(const Theory& T, const PlumbingTree& t);

PlumbingTree mirror(const PlumbingTree& t);

struct ColorprimeReport {
  int64_t n = 0;
  int64_t ell = 0;
  int64_t n_hat = 0;
  int64_t color = 0;
  CycNum surgered;
  CycNum colored;
  std::optional<PhaseWitness> witness;
};

/// Compares t plus an n/ell leaf at `site` with t plus a 0-framed leaf of
/// color n_hat - 1, where n * n_hat = +-1 mod p and 1 <= n_hat <= d.
ColorprimeReport colorprime_check(const Theory& T, const PlumbingTree& t, size_t site, int64_t n, int64_t ell);

}  // namespace qcong
