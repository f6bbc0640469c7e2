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

#include "qcong/plumbing.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "qcong/error.hpp"

namespace qcong {

// ---------------------------------------------------------------------------
// PlumbingTree

size_t PlumbingTree::add_vertex(const BigRat& label, std::optional<int64_t> color, std::optional<int64_t> id) {
  const int64_t vid = id ? *id : next_id_;
  if (index_of(vid)) throw Error(Errc::InvalidArgument, "duplicate vertex id " + std::to_string(vid));
  next_id_ = std::max(next_id_, vid + 1);
  vertices_.push_back({vid, label, color});
  return vertices_.size() - 1;
}

void PlumbingTree::add_edge(size_t u, size_t v) {
  if (u >= size() || v >= size() || u == v) throw Error(Errc::InvalidArgument, "bad edge endpoints");
  for (const auto& comp : components()) {
    const bool has_u = std::binary_search(comp.begin(), comp.end(), u);
    const bool has_v = std::binary_search(comp.begin(), comp.end(), v);
    if (has_u && has_v) throw Error(Errc::InvalidArgument, "edge would close a cycle");
  }
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

void PlumbingTree::remove_edge(size_t u, size_t v) {
  const std::pair<size_t, size_t> e{std::min(u, v), std::max(u, v)};
  auto it = std::find(edges_.begin(), edges_.end(), e);
  if (it == edges_.end()) throw Error(Errc::InvalidArgument, "no such edge");
  edges_.erase(it);
}

void PlumbingTree::remove_vertex(size_t index) {
  if (index >= size()) throw Error(Errc::InvalidArgument, "vertex index out of range");
  std::vector<std::pair<size_t, size_t>> kept;
  for (auto [u, v] : edges_) {
    if (u == index || v == index) continue;
    kept.emplace_back(u > index ? u - 1 : u, v > index ? v - 1 : v);
  }
  edges_ = std::move(kept);
  vertices_.erase(vertices_.begin() + static_cast<std::ptrdiff_t>(index));
}

bool PlumbingTree::has_edge(size_t u, size_t v) const {
  return std::find(edges_.begin(), edges_.end(), std::pair{std::min(u, v), std::max(u, v)}) != edges_.end();
}

std::vector<size_t> PlumbingTree::neighbors(size_t v) const {
  std::vector<size_t> out;
  for (auto [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<size_t> PlumbingTree::index_of(int64_t id) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  return std::nullopt;
}

std::vector<std::vector<size_t>> PlumbingTree::components() const {
  std::vector<size_t> parent(size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [u, v] : edges_) parent[find(u)] = find(v);
  std::vector<std::vector<size_t>> out;
  std::vector<int64_t> slot(size(), -1);
  for (size_t v = 0; v < size(); ++v) {
    const size_t root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int64_t>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

bool PlumbingTree::is_integral() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const PlumbingVertex& v) { return v.label.get_den() == 1; });
}

void PlumbingTree::append(const PlumbingTree& other) {
  const size_t offset = size();
  for (const auto& v : other.vertices_) add_vertex(v.label, v.color);
  for (auto [u, v] : other.edges_) edges_.emplace_back(u + offset, v + offset);
}

namespace {

std::string label_text(const PlumbingVertex& v) {
  std::string s = v.label.get_str();
  if (v.color) s += "[c=" + std::to_string(*v.color) + "]";
  return s;
}

}  // namespace

std::string PlumbingTree::to_string() const {
  if (empty()) return "S3";
  std::vector<std::string> parts;
  for (const auto& comp : components()) {
    if (comp.size() == 1) {
      parts.push_back("U(" + label_text(vertices_[comp[0]]) + ")");
      continue;
    }
    std::optional<size_t> center;
    for (size_t v : comp) {
      if (degree(v) + 1 == comp.size()) {
        center = v;
        break;
      }
    }
    std::ostringstream out;
    if (center) {
      out << "H(" << label_text(vertices_[*center]);
      for (size_t v : comp)
        if (v != *center) out << "," << label_text(vertices_[v]);
      out << ")";
    } else if (std::all_of(comp.begin(), comp.end(), [&](size_t v) { return degree(v) <= 2; })) {
      size_t cur = *std::find_if(comp.begin(), comp.end(), [&](size_t v) { return degree(v) == 1; });
      size_t prev = cur;
      out << "C(" << label_text(vertices_[cur]);
      for (size_t step = 1; step < comp.size(); ++step) {
        for (size_t w : neighbors(cur)) {
          if (w != prev) {
            prev = cur;
            cur = w;
            break;
          }
        }
        out << "," << label_text(vertices_[cur]);
      }
      out << ")";
    } else {
      out << "tree{";
      for (size_t k = 0; k < comp.size(); ++k) out << (k ? "," : "") << label_text(vertices_[comp[k]]);
      out << ";";
      bool first = true;
      for (auto [u, v] : edges_) {
        if (!std::binary_search(comp.begin(), comp.end(), u)) continue;
        out << (first ? "" : ",") << (std::lower_bound(comp.begin(), comp.end(), u) - comp.begin()) << "-"
            << (std::lower_bound(comp.begin(), comp.end(), v) - comp.begin());
        first = false;
      }
      out << "}";
    }
    parts.push_back(out.str());
  }
  std::string joined;
  for (size_t k = 0; k < parts.size(); ++k) joined += (k ? " + " : "") + parts[k];
  return joined;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class DescParser {
 public:
  explicit DescParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  PlumbingTree run() {
    PlumbingTree t;
    if (s_.empty()) fail("empty description");
    component(t);
    while (pos_ < s_.size()) {
      expect('+');
      component(t);
    }
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  bool peek(char ch) const { return pos_ < s_.size() && s_[pos_] == ch; }

  void expect(char ch) {
    if (!peek(ch)) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  BigInt integer() {
    const size_t start = pos_;
    if (peek('-') || peek('+')) ++pos_;
    const size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    std::string text = s_.substr(start, pos_ - start);
    if (text[0] == '+') text.erase(0, 1);
    return BigInt(text);
  }

  std::optional<int64_t> color() {
    if (!peek('[')) return std::nullopt;
    ++pos_;
    if (s_.compare(pos_, 2, "c=") != 0) fail("expected 'c='");
    pos_ += 2;
    const BigInt c = integer();
    expect(']');
    if (!c.fits_slong_p() || c < 0) fail("bad color");
    return c.get_si();
  }

  PlumbingVertex label() {
    PlumbingVertex v;
    const BigInt num = integer();
    BigInt den = 1;
    if (peek('/')) {
      ++pos_;
      den = integer();
      if (den == 0) throw Error(Errc::ZeroDenominator, "label " + num.get_str() + "/0");
    }
    v.label = BigRat(num, den);
    v.label.canonicalize();
    v.color = color();
    if (v.color && v.label.get_den() != 1) fail("colored vertices need integer labels");
    return v;
  }

  std::vector<PlumbingVertex> label_list() {
    expect('(');
    std::vector<PlumbingVertex> out{label()};
    while (peek(',')) {
      ++pos_;
      out.push_back(label());
    }
    expect(')');
    return out;
  }

  void component(PlumbingTree& t) {
    if (s_.compare(pos_, 2, "S3") == 0) {
      pos_ += 2;
      return;
    }
    if (pos_ >= s_.size()) fail("expected a component");
    const char kind = s_[pos_++];
    std::vector<PlumbingVertex> labels = label_list();
    if (kind == 'U') {
      if (labels.size() != 1) fail("U takes one label");
      if (auto c = color()) {
        if (labels[0].color) fail("color given twice");
        if (labels[0].label.get_den() != 1) fail("colored vertices need integer labels");
        labels[0].color = c;
      }
    } else if (kind != 'H' && kind != 'C') {
      fail(std::string("unknown component '") + kind + "'");
    }
    std::vector<size_t> idx;
    for (const auto& v : labels) idx.push_back(t.add_vertex(v.label, v.color));
    for (size_t k = 1; k < idx.size(); ++k) t.add_edge(kind == 'H' ? idx[0] : idx[k - 1], idx[k]);
  }

  std::string s_;
  size_t pos_ = 0;
};

}  // namespace

PlumbingTree parse_plumbing(std::string_view desc) { return DescParser(desc).run(); }

// ---------------------------------------------------------------------------
// Rational labels

std::vector<BigInt> negative_continued_fraction(const BigRat& x) {
  std::vector<BigInt> out;
  BigRat cur = x;
  for (;;) {
    BigInt a;
    mpz_cdiv_q(a.get_mpz_t(), cur.get_num_mpz_t(), cur.get_den_mpz_t());
    out.push_back(a);
    if (cur.get_den() == 1) return out;
    cur = BigRat(1) / (BigRat(a) - cur);
  }
}

PlumbingTree expand_rational(const PlumbingTree& t) {
  PlumbingTree out = t;
  for (size_t v = 0; v < t.size(); ++v) {
    const PlumbingVertex& src = t.vertex(v);
    if (src.label.get_den() == 1) continue;
    if (src.color) throw Error(Errc::InvalidArgument, "colored vertex with rational label");
    const auto chain = negative_continued_fraction(src.label);
    out.vertex(v).label = BigRat(chain[0]);
    size_t prev = v;
    for (size_t k = 1; k < chain.size(); ++k) {
      const size_t w = out.add_vertex(BigRat(chain[k]));
      out.add_edge(prev, w);
      prev = w;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Linking form

namespace {

std::vector<size_t> surgered(const PlumbingTree& t) {
  std::vector<size_t> out;
  for (size_t v = 0; v < t.size(); ++v)
    if (!t.vertex(v).color) out.push_back(v);
  return out;
}

void require_integral(const PlumbingTree& t) {
  if (!t.is_integral()) throw Error(Errc::InvalidArgument, "description has rational labels; expand first");
}

}  // namespace

std::vector<std::vector<BigInt>> linking_matrix(const PlumbingTree& t) {
  require_integral(t);
  const auto idx = surgered(t);
  std::vector<std::vector<BigInt>> L(idx.size(), std::vector<BigInt>(idx.size(), 0));
  for (size_t i = 0; i < idx.size(); ++i) {
    L[i][i] = t.vertex(idx[i]).label.get_num();
    for (size_t j = 0; j < idx.size(); ++j)
      if (i != j && t.has_edge(idx[i], idx[j])) L[i][j] = 1;
  }
  return L;
}

int64_t signature(const PlumbingTree& t) {
  const auto L = linking_matrix(t);
  const size_t n = L.size();
  std::vector<std::vector<BigRat>> M(n, std::vector<BigRat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) M[i][j] = L[i][j];

  std::vector<bool> done(n, false);
  int64_t sigma = 0;
  for (;;) {
    std::optional<size_t> pivot;
    for (size_t i = 0; i < n && !pivot; ++i)
      if (!done[i] && M[i][i] != 0) pivot = i;
    if (!pivot) {
      // zero diagonal: fold a partner row/column in to create a pivot
      std::optional<std::pair<size_t, size_t>> off;
      for (size_t i = 0; i < n && !off; ++i)
        for (size_t j = 0; j < n && !off; ++j)
          if (!done[i] && !done[j] && i != j && M[i][j] != 0) off = std::pair{i, j};
      if (!off) break;
      auto [i, j] = *off;
      for (size_t k = 0; k < n; ++k) M[i][k] += M[j][k];
      for (size_t k = 0; k < n; ++k) M[k][i] += M[k][j];
      continue;
    }
    const size_t p = *pivot;
    const BigRat piv = M[p][p];
    sigma += sgn(piv);
    done[p] = true;
    for (size_t i = 0; i < n; ++i) {
      if (done[i] || M[i][p] == 0) continue;
      const BigRat f = M[i][p] / piv;
      for (size_t k = 0; k < n; ++k) M[i][k] -= f * M[p][k];
    }
    for (size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      M[p][i] = 0;
      M[i][p] = 0;
    }
  }
  return sigma;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

int64_t label_mod(const PlumbingVertex& v, int64_t m) {
  BigInt r = v.label.get_num() % m;
  return mod_floor(r.get_si(), m);
}

CycNum twist_power(const Theory& T, int64_t c, const PlumbingVertex& v) {
  auto [sign, e] = T.twist_monomial(c, label_mod(v, 2 * T.root_order()));
  CycNum z = CycNum::zeta(T.root_order(), e);
  return sign > 0 ? z : -z;
}

struct RootedComponent {
  std::vector<size_t> order;   // BFS order, root first
  std::vector<int64_t> parent;  // -1 for the root; indexed by vertex
};

RootedComponent root_component(const PlumbingTree& t, const std::vector<size_t>& comp) {
  RootedComponent rc{{comp[0]}, std::vector<int64_t>(t.size(), -1)};
  for (size_t head = 0; head < rc.order.size(); ++head) {
    const size_t u = rc.order[head];
    for (size_t w : t.neighbors(u)) {
      if (static_cast<int64_t>(w) == rc.parent[u]) continue;
      rc.parent[w] = static_cast<int64_t>(u);
      rc.order.push_back(w);
    }
  }
  return rc;
}

class HopfTable {
 public:
  explicit HopfTable(const Theory& T) : T_(T), n_(T.max_color() + 1), cache_(n_ * n_) {}
  const CycNum& at(int64_t c, int64_t b) {
    auto& slot = cache_[c * n_ + b];
    if (!slot) slot = T_.reduced_hopf(c, b);
    return *slot;
  }

 private:
  const Theory& T_;
  int64_t n_;
  std::vector<std::optional<CycNum>> cache_;
};

}  // namespace

CycNum colored_eval(const Theory& T, const PlumbingTree& t, const std::vector<int64_t>& coloring) {
  require_integral(t);
  if (coloring.size() != t.size()) throw Error(Errc::InvalidArgument, "coloring must cover every vertex");
  for (int64_t c : coloring) T.check_color(c);
  CycNum value = CycNum::one(T.root_order());
  for (const auto& comp : t.components()) {
    const auto rc = root_component(t, comp);
    value *= T.delta(coloring[rc.order[0]]);
    for (size_t v : rc.order) {
      value *= twist_power(T, coloring[v], t.vertex(v));
      if (rc.parent[v] >= 0) value *= T.reduced_hopf(coloring[rc.parent[v]], coloring[v]);
    }
  }
  return value;
}

CycNum surgery_sum(const Theory& T, const PlumbingTree& t) {
  require_integral(t);
  const int64_t N = T.root_order();
  HopfTable hopf(T);
  CycNum total = CycNum::one(N);
  for (const auto& comp : t.components()) {
    const auto rc = root_component(t, comp);
    std::vector<std::vector<int64_t>> allowed(t.size());
    for (size_t v : comp) {
      const auto& c = t.vertex(v).color;
      if (c) T.check_color(*c);
      allowed[v] = c ? std::vector<int64_t>{*c} : T.colors();
    }
    // F[v][k]: value of the subtree at v with v colored allowed[v][k]
    std::vector<std::vector<CycNum>> F(t.size());
    for (auto it = rc.order.rbegin(); it != rc.order.rend(); ++it) {
      const size_t v = *it;
      const bool weighted = !t.vertex(v).color;
      F[v].reserve(allowed[v].size());
      for (int64_t c : allowed[v]) {
        CycNum val = twist_power(T, c, t.vertex(v));
        if (weighted) val *= T.delta(c);
        for (size_t w : t.neighbors(v)) {
          if (static_cast<int64_t>(w) == rc.parent[v]) continue;
          CycNum msg = CycNum::zero(N);
          for (size_t k = 0; k < allowed[w].size(); ++k) msg += hopf.at(c, allowed[w][k]) * F[w][k];
          val *= msg;
        }
        F[v].push_back(std::move(val));
      }
    }
    const size_t root = rc.order[0];
    CycNum sum = CycNum::zero(N);
    for (size_t k = 0; k < allowed[root].size(); ++k) sum += T.delta(allowed[root][k]) * F[root][k];
    total *= sum;
  }
  return total;
}

namespace {

CycNum eta_power(const Theory& T, size_t k) {
  CycNum out = CycNum::one(T.root_order());
  for (size_t i = 0; i < k; ++i) out *= T.eta();
  return out;
}

}  // namespace

CycNum normalized(const Theory& T, const PlumbingTree& desc) {
  if (T.kind() != TheoryKind::SO3) throw Error(Errc::InvalidArgument, "normalized invariant needs an SO(3) theory");
  const PlumbingTree t = expand_rational(desc);
  const int64_t sigma = signature(t);
  return T.framing_kappa().pow(-sigma) * eta_power(T, surgered(t).size()) * surgery_sum(T, t);
}

CycNum invariant(const Theory& T, const PlumbingTree& desc) {
  if (T.kind() == TheoryKind::SO3) return T.eta() * normalized(T, desc);
  const PlumbingTree t = expand_rational(desc);
  return T.framing_kappa().pow(-signature(t)) * surgery_sum(T, t);
}

PlumbingTree mirror(const PlumbingTree& t) {
  PlumbingTree out = t;
  for (size_t v = 0; v < out.size(); ++v) out.vertex(v).label = -out.vertex(v).label;
  return out;
}

ColorprimeReport colorprime_check(const Theory& T, const PlumbingTree& t, size_t site, int64_t n, int64_t ell) {
  if (T.kind() != TheoryKind::SO3) throw Error(Errc::InvalidArgument, "colorprime needs an SO(3) theory");
  const int64_t p = T.level();
  if (site >= t.size()) throw Error(Errc::InvalidArgument, "attachment site out of range");
  if (ell == 0 || ell % p != 0) throw Error(Errc::InvalidArgument, "ell must be a nonzero multiple of p");
  if (std::gcd(n, ell) != 1) throw Error(Errc::NotCoprime, "n and ell must be coprime");

  ColorprimeReport rep;
  rep.n = n;
  rep.ell = ell;
  for (int64_t h = 1; h <= T.d(); ++h) {
    const int64_t prod = mod_floor(n * h, p);
    if (prod == 1 || prod == p - 1) {
      rep.n_hat = h;
      break;
    }
  }
  if (rep.n_hat == 0) throw Error(Errc::InvalidArgument, "no n_hat in [1, d]");
  rep.color = rep.n_hat - 1;

  PlumbingTree with_surgery = t;
  with_surgery.add_edge(site, with_surgery.add_vertex(BigRat(n, ell)));
  with_surgery.vertex(with_surgery.size() - 1).label.canonicalize();
  PlumbingTree with_color = t;
  with_color.add_edge(site, with_color.add_vertex(BigRat(0), rep.color));

  rep.surgered = invariant(T, with_surgery);
  rep.colored = invariant(T, with_color);
  rep.witness = phase_equal(T, rep.surgered, rep.colored);
  return rep;
}

}  // namespace qcong
