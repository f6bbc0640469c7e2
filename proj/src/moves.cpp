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

#include "qcong/moves.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "qcong/error.hpp"

namespace qcong {

namespace {

[[noreturn]] void illegal(const std::string& why) { throw Error(Errc::IllegalMove, why); }

size_t locate(const PlumbingTree& t, int64_t id) {
  if (auto i = t.index_of(id)) return *i;
  illegal("no vertex v" + std::to_string(id));
}

bool congruent(const BigRat& x, const BigRat& y, int64_t f) {
  const BigRat diff = x - y;
  return diff.get_den() == 1 && mpz_divisible_ui_p(diff.get_num().get_mpz_t(), static_cast<unsigned long>(f)) != 0;
}

bool is_unit_label(const BigRat& x) { return x == 1 || x == -1; }

struct Matcher {
  const PlumbingTree& a;
  const PlumbingTree& b;
  int64_t f;
  std::vector<std::vector<size_t>> nb_a, nb_b;
  std::vector<size_t> map;
  std::vector<bool> used;

  bool compatible(size_t u, size_t v) const {
    const auto& x = a.vertex(u);
    const auto& y = b.vertex(v);
    return nb_a[u].size() == nb_b[v].size() && x.color == y.color && congruent(x.label, y.label, f);
  }

  bool extend(size_t u) {
    if (u == a.size()) return true;
    for (size_t v = 0; v < b.size(); ++v) {
      if (used[v] || !compatible(u, v)) continue;
      bool ok = true;
      for (size_t w : nb_a[u])
        if (w < u && !b.has_edge(map[w], v)) ok = false;
      if (!ok) continue;
      map[u] = v;
      used[v] = true;
      if (extend(u + 1)) return true;
      used[v] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<size_t>> match_mod(const PlumbingTree& a, const PlumbingTree& b, int64_t f) {
  if (a.size() != b.size() || a.edges().size() != b.edges().size()) return std::nullopt;
  Matcher m{a, b, f, {}, {}, std::vector<size_t>(a.size()), std::vector<bool>(b.size(), false)};
  for (size_t i = 0; i < a.size(); ++i) {
    m.nb_a.push_back(a.neighbors(i));
    m.nb_b.push_back(b.neighbors(i));
  }
  if (!m.extend(0)) return std::nullopt;
  return m.map;
}

PlumbingTree apply(const PlumbingTree& t, const Move& m, int64_t f) {
  PlumbingTree out = t;
  switch (m.kind) {
    case MoveKind::FrameShift: {
      const size_t v = locate(out, m.vertices.at(0));
      if (m.amount % f != 0) illegal("shift " + m.amount.get_str() + " is not a multiple of " + std::to_string(f));
      if (out.vertex(v).color) illegal("cannot reframe a colored vertex");
      out.vertex(v).label += BigRat(m.amount);
      break;
    }
    case MoveKind::BlowDown: {
      const size_t v = locate(out, m.vertices.at(0));
      const auto& x = out.vertex(v);
      if (x.color || !is_unit_label(x.label)) illegal("blowdown needs an uncolored +-1 vertex");
      const auto nb = out.neighbors(v);
      if (nb.size() > 2) illegal("blowdown of a vertex of degree " + std::to_string(nb.size()));
      for (size_t w : nb) {
        if (out.vertex(w).color) illegal("blowdown next to a colored vertex");
        out.vertex(w).label -= x.label;
      }
      const int64_t keep_a = nb.size() == 2 ? out.vertex(nb[0]).id : -1;
      const int64_t keep_b = nb.size() == 2 ? out.vertex(nb[1]).id : -1;
      out.remove_vertex(v);
      if (keep_a >= 0) out.add_edge(*out.index_of(keep_a), *out.index_of(keep_b));
      break;
    }
    case MoveKind::BlowUpLeaf: {
      const size_t v = locate(out, m.vertices.at(0));
      if (m.amount != 1 && m.amount != -1) illegal("blowup sign must be +1 or -1");
      if (out.vertex(v).color) illegal("blowup on a colored vertex");
      out.vertex(v).label += BigRat(m.amount);
      out.add_edge(v, out.add_vertex(BigRat(m.amount)));
      break;
    }
    case MoveKind::DropFreeUnknot: {
      const size_t v = locate(out, m.vertices.at(0));
      if (out.degree(v) != 0 || out.vertex(v).color || !is_unit_label(out.vertex(v).label)) {
        illegal("drop needs an isolated uncolored +-1 unknot");
      }
      out.remove_vertex(v);
      break;
    }
    case MoveKind::SplitZeroLeaf: {
      const size_t v = locate(out, m.vertices.at(0));
      const auto nb = out.neighbors(v);
      if (nb.size() != 1 || out.vertex(v).color || out.vertex(v).label != 0) illegal("split needs an uncolored 0-framed leaf");
      const auto& u = out.vertex(nb[0]);
      if (u.color || u.label.get_den() != 1) illegal("split needs an uncolored integral neighbor");
      const int64_t uid = u.id;
      out.remove_vertex(v);
      out.remove_vertex(*out.index_of(uid));
      break;
    }
    case MoveKind::JoinZeroPair: {
      if (m.vertices.empty()) illegal("join needs at least one vertex");
      std::vector<int64_t> ids = m.vertices;
      const auto comps = out.components();
      std::vector<size_t> seen;
      for (int64_t id : ids) {
        const size_t v = locate(out, id);
        const auto it = std::find_if(comps.begin(), comps.end(), [&](const auto& c) {
          return std::find(c.begin(), c.end(), v) != c.end();
        });
        const size_t ci = static_cast<size_t>(it - comps.begin());
        if (std::find(seen.begin(), seen.end(), ci) != seen.end()) illegal("join vertices share a component");
        seen.push_back(ci);
      }
      const size_t c = out.add_vertex(BigRat(m.amount));
      for (int64_t id : ids) out.add_edge(c, *out.index_of(id));
      out.add_edge(c, out.add_vertex(BigRat(0)));
      break;
    }
    case MoveKind::RelabelModCheck: {
      const PlumbingTree& target = m.target.value();
      const auto map = match_mod(out, target, f);
      if (!map) illegal(out.to_string() + " and " + target.to_string() + " differ mod " + std::to_string(f));
      for (size_t i = 0; i < out.size(); ++i) out.vertex(i).label = target.vertex((*map)[i]).label;
      break;
    }
  }
  return out;
}

namespace {

std::vector<std::string> words(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

int64_t vertex_ref(const std::string& w) {
  if (w.size() < 2 || w[0] != 'v') throw Error(Errc::ParseError, "expected v<k>, got '" + w + "'");
  try {
    size_t used = 0;
    const int64_t k = std::stoll(w.substr(1), &used);
    if (used + 1 != w.size() || k < 0) throw Error(Errc::ParseError, "bad vertex reference '" + w + "'");
    return k;
  } catch (const std::logic_error&) {
    throw Error(Errc::ParseError, "bad vertex reference '" + w + "'");
  }
}

BigInt integer_arg(const std::string& w) {
  BigInt out;
  const std::string s = !w.empty() && w[0] == '+' ? w.substr(1) : w;
  if (s.empty() || out.set_str(s, 10) != 0) throw Error(Errc::ParseError, "expected an integer, got '" + w + "'");
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Move parse_move(std::string_view line) {
  const std::string_view body = trim(line);
  const auto w = words(body);
  if (w.empty()) throw Error(Errc::ParseError, "empty move");
  Move m;
  m.text = std::string(body);
  auto arity = [&](size_t n) {
    if (w.size() != n) throw Error(Errc::ParseError, "wrong number of arguments: " + m.text);
  };
  const std::string& op = w[0];
  if (op == "shift") {
    arity(3);
    m.kind = MoveKind::FrameShift;
    m.vertices = {vertex_ref(w[1])};
    m.amount = integer_arg(w[2]);
  } else if (op == "blowdown") {
    arity(2);
    m.kind = MoveKind::BlowDown;
    m.vertices = {vertex_ref(w[1])};
  } else if (op == "blowup") {
    arity(3);
    m.kind = MoveKind::BlowUpLeaf;
    m.vertices = {vertex_ref(w[1])};
    m.amount = integer_arg(w[2]);
    if (abs(m.amount) != 1) throw Error(Errc::ParseError, "blowup sign must be +1 or -1: " + m.text);
  } else if (op == "drop") {
    arity(2);
    m.kind = MoveKind::DropFreeUnknot;
    m.vertices = {vertex_ref(w[1])};
  } else if (op == "split") {
    arity(2);
    m.kind = MoveKind::SplitZeroLeaf;
    m.vertices = {vertex_ref(w[1])};
  } else if (op == "join") {
    if (w.size() < 3) throw Error(Errc::ParseError, "join needs a label and vertices");
    m.kind = MoveKind::JoinZeroPair;
    m.amount = integer_arg(w[1]);
    for (size_t i = 2; i < w.size(); ++i) m.vertices.push_back(vertex_ref(w[i]));
  } else if (op == "check") {
    m.kind = MoveKind::RelabelModCheck;
    m.target = parse_plumbing(trim(body.substr(5)));
  } else {
    throw Error(Errc::ParseError, "unknown move '" + op + "'");
  }
  return m;
}

MoveScript parse_script(std::string_view text) {
  MoveScript s;
  bool have_f = false, have_start = false, have_end = false;
  std::istringstream in{std::string(text)};
  int lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (have_end) throw Error(Errc::ParseError, where + "content after end=");
    if (line.substr(0, 2) == "f=") {
      if (have_f) throw Error(Errc::ParseError, where + "duplicate f=");
      s.f = integer_arg(std::string(trim(line.substr(2)))).get_si();
      if (s.f < 2) throw Error(Errc::ParseError, where + "modulus must be >= 2");
      have_f = true;
    } else if (line.substr(0, 6) == "start=") {
      if (!have_f || have_start) throw Error(Errc::ParseError, where + "start= must follow f= once");
      s.start = parse_plumbing(line.substr(6));
      have_start = true;
    } else if (line.substr(0, 4) == "end=") {
      if (!have_start) throw Error(Errc::ParseError, where + "end= before start=");
      s.claimed_end = parse_plumbing(line.substr(4));
      have_end = true;
    } else {
      if (!have_start) throw Error(Errc::ParseError, where + "move before start=");
      s.steps.push_back(parse_move(line));
    }
  }
  if (!have_end) throw Error(Errc::ParseError, "script has no end=");
  return s;
}

MoveScript load_script(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_script(buf.str());
}

namespace {

std::string move_to_string(const Move& m) {
  auto v = [](int64_t id) { return "v" + std::to_string(id); };
  switch (m.kind) {
    case MoveKind::FrameShift: return "shift " + v(m.vertices[0]) + " " + m.amount.get_str();
    case MoveKind::BlowDown: return "blowdown " + v(m.vertices[0]);
    case MoveKind::BlowUpLeaf: return "blowup " + v(m.vertices[0]) + (m.amount > 0 ? " +1" : " -1");
    case MoveKind::DropFreeUnknot: return "drop " + v(m.vertices[0]);
    case MoveKind::SplitZeroLeaf: return "split " + v(m.vertices[0]);
    case MoveKind::JoinZeroPair: {
      std::string out = "join " + m.amount.get_str();
      for (int64_t id : m.vertices) out += " " + v(id);
      return out;
    }
    case MoveKind::RelabelModCheck: return "check " + m.target->to_string();
  }
  return "";
}

}  // namespace

std::string script_to_string(const MoveScript& s) {
  std::string out = "f=" + std::to_string(s.f) + "\nstart=" + s.start.to_string() + "\n";
  for (const auto& m : s.steps) out += move_to_string(m) + "\n";
  return out + "end=" + s.claimed_end.to_string() + "\n";
}

MoveScript mirror_script(const MoveScript& s) {
  MoveScript out{s.f, mirror(s.start), {}, mirror(s.claimed_end)};
  for (Move m : s.steps) {
    if (m.kind != MoveKind::RelabelModCheck) m.amount = -m.amount;
    if (m.target) m.target = mirror(*m.target);
    m.text = move_to_string(m);
    out.steps.push_back(std::move(m));
  }
  return out;
}

bool ReplayReport::verified() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReplayCheck& c) { return !c.compatible || c.witness; });
}

ReplayReport replay(const MoveScript& script, const std::vector<Theory>& theories) {
  ReplayReport rep;
  rep.f = script.f;
  PlumbingTree cur = script.start;
  rep.trace.push_back(cur.to_string());
  for (size_t i = 0; i < script.steps.size(); ++i) {
    try {
      cur = apply(cur, script.steps[i], script.f);
    } catch (const Error& e) {
      throw Error(Errc::StepFailed, "step " + std::to_string(i + 1) + " (" + script.steps[i].text + "): " + e.what());
    }
    rep.trace.push_back(cur.to_string());
  }
  if (!match_mod(cur, script.claimed_end, script.f)) {
    throw Error(Errc::StepFailed, "end: reached " + cur.to_string() + ", claimed " + script.claimed_end.to_string());
  }
  for (const Theory& T : theories) {
    ReplayCheck c;
    c.theory = T.name();
    c.compatible = T.kind() == TheoryKind::SO3 && script.f % T.level() == 0;
    if (c.compatible) {
      c.start_value = invariant(T, script.start);
      c.end_value = invariant(T, script.claimed_end);
      c.witness = phase_equal(T, *c.start_value, *c.end_value);
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace qcong
