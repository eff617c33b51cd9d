// Copyright 2026 The breakqubo authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "qubo.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "json.hpp"

namespace breakqubo {

std::string to_string(CcMode mode) {
  switch (mode) {
    case CcMode::None:    return "none";
    case CcMode::Cc2:     return "cc2";
    case CcMode::Cc3:     return "cc3";
    case CcMode::Cc2And3: return "cc2+cc3";
  }
  return "?";
}

CcMode cc_mode_from_string(const std::string& name) {
  if (name == "none") return CcMode::None;
  if (name == "cc2") return CcMode::Cc2;
  if (name == "cc3") return CcMode::Cc3;
  if (name == "cc2+cc3") return CcMode::Cc2And3;
  throw ParseError("unknown cc mode: " + name);
}

int QuboModel::num_match_vars() const {
  int c = 0;
  for (const VarMeta& m : var_meta_) c += (m.kind == VarMeta::Kind::Match);
  return c;
}

int QuboModel::num_slack_vars() const {
  return has_meta() ? num_vars_ - num_match_vars() : 0;
}

int64_t QuboModel::objective(std::span<const uint8_t> z) const {
  if (static_cast<int>(z.size()) != num_vars_) {
    throw std::invalid_argument("objective: bit vector has length " +
                                std::to_string(z.size()) + ", model has " +
                                std::to_string(num_vars_) + " variables");
  }
  int64_t v = offset_;
  for (const auto& [key, c] : terms_) {
    auto [i, j] = key;
    if (i == j) {
      v += c * z[i];
    } else if (z[i] && z[j]) {
      v += c;
    }
  }
  return v;
}

void QuboModel::add_term(int i, int j, int64_t c) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= num_vars_) throw std::invalid_argument("add_term: index out of range");
  if (c == 0) return;
  terms_[{i, j}] += c;
}

void QuboModel::canonicalize() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

QuboModel QuboModel::generic(int num_vars) {
  if (num_vars < 0) throw std::invalid_argument("generic: negative variable count");
  QuboModel q;
  q.num_vars_ = num_vars;
  return q;
}

namespace {

// y(t,s) as an affine form in the quad variable: y = c0 + c1 * z.
struct Affine {
  int var;
  int64_t c0;
  int64_t c1;
};

Affine affine_of(const CellRef& c) {
  return c.negated ? Affine{c.var, 1, -1} : Affine{c.var, 0, 1};
}

// Adds penalty * (S + a)(S + b) to q, where S = const_part + sum of atoms and
// the atoms may repeat variables (coefficients are collected first; z^2 = z).
void add_quadratic_window(QuboModel& q, const std::vector<Affine>& atoms,
                          int64_t a, int64_t b, int64_t penalty) {
  int64_t c0 = 0;
  std::map<int, int64_t> coef;
  for (const Affine& at : atoms) {
    c0 += at.c0;
    coef[at.var] += at.c1;
  }
  std::erase_if(coef, [](const auto& kv) { return kv.second == 0; });
  // (S + A + a)(S + A + b) with S the pure variable part:
  //   S^2 + (2A + a + b) S + (A + a)(A + b),  z_i^2 = z_i.
  const int64_t lin_shift = 2 * c0 + a + b;
  q.add_offset(penalty * (c0 + a) * (c0 + b));
  for (auto it = coef.begin(); it != coef.end(); ++it) {
    const auto [u, cu] = *it;
    q.add_term(u, u, penalty * (cu * cu + cu * lin_shift));
    for (auto jt = std::next(it); jt != coef.end(); ++jt) {
      q.add_term(u, jt->first, penalty * 2 * cu * jt->second);
    }
  }
}

void check_penalty_args(const QuboModel& q, const MeetingSet& ms, int64_t penalty,
                        bool adding_cc2) {
  if (penalty < 1) throw std::invalid_argument("penalty must be >= 1");
  if (!q.has_meta() || q.n() != ms.n || q.num_match_vars() != ms.num_vars()) {
    throw std::invalid_argument("penalty: model does not match the meeting set");
  }
  if (q.penalty() != 0 && q.penalty() != penalty) {
    throw std::invalid_argument("penalty: model already carries penalty " +
                                std::to_string(q.penalty()));
  }
  const bool has_cc2 = q.cc_mode() == CcMode::Cc2 || q.cc_mode() == CcMode::Cc2And3;
  const bool has_cc3 = q.cc_mode() == CcMode::Cc3 || q.cc_mode() == CcMode::Cc2And3;
  if ((adding_cc2 && has_cc2) || (!adding_cc2 && has_cc3)) {
    throw std::invalid_argument("penalty: constraint level already added");
  }
}

}  // namespace

QuboModel build_break_qubo(const MeetingSet& ms) {
  QuboModel q;
  q.n_ = ms.n;
  q.num_vars_ = ms.num_vars();
  q.var_meta_.reserve(ms.quads.size());
  for (const MeetingQuad& quad : ms.quads) {
    q.var_meta_.push_back({VarMeta::Kind::Match, quad, 0, 0});
  }
  // Per adjacent cell pair: y y' + (1-y)(1-y') = 1 - y - y' + 2 y y'.
  for (int t = 1; t <= ms.teams(); ++t) {
    for (int s = 1; s < ms.slots(); ++s) {
      Affine ya = affine_of(ms.cell(t, s));
      Affine yb = affine_of(ms.cell(t, s + 1));
      if (ya.var == yb.var) {
        throw std::invalid_argument(
            "build_break_qubo: adjacent cells (" + std::to_string(t) + "," +
            std::to_string(s) + ") and (" + std::to_string(t) + "," +
            std::to_string(s + 1) + ") share a variable");
      }
      q.add_offset(1 - ya.c0 - yb.c0 + 2 * ya.c0 * yb.c0);
      q.add_term(ya.var, ya.var, ya.c1 * (2 * yb.c0 - 1));
      q.add_term(yb.var, yb.var, yb.c1 * (2 * ya.c0 - 1));
      q.add_term(ya.var, yb.var, 2 * ya.c1 * yb.c1);
    }
  }
  q.canonicalize();
  return q;
}

QuboModel add_cc2_penalty(const QuboModel& q, const MeetingSet& ms, int64_t penalty) {
  check_penalty_args(q, ms, penalty, /*adding_cc2=*/true);
  QuboModel out = q;
  out.penalty_ = penalty;
  out.cc_mode_ = (q.cc_mode() == CcMode::Cc3) ? CcMode::Cc2And3 : CcMode::Cc2;
  const int window_slots = 2 * ms.n - 1;
  for (int t = 1; t <= ms.teams(); ++t) {
    for (int s = 1; s <= window_slots; ++s) {
      if (s + 2 > ms.slots()) throw std::invalid_argument("cc2 window out of range");
      std::vector<Affine> atoms{affine_of(ms.cell(t, s)),
                                affine_of(ms.cell(t, s + 1)),
                                affine_of(ms.cell(t, s + 2))};
      add_quadratic_window(out, atoms, -1, -2, penalty);
    }
  }
  out.canonicalize();
  return out;
}

QuboModel add_cc3_penalty(const QuboModel& q, const MeetingSet& ms, int64_t penalty) {
  check_penalty_args(q, ms, penalty, /*adding_cc2=*/false);
  QuboModel out = q;
  out.penalty_ = penalty;
  out.cc_mode_ = (q.cc_mode() == CcMode::Cc2) ? CcMode::Cc2And3 : CcMode::Cc3;
  const int window_slots = 2 * ms.n - 1;
  for (int t = 1; t <= ms.teams(); ++t) {
    for (int s = 1; s <= window_slots; ++s) {
      if (s + 3 > ms.slots()) throw std::invalid_argument("cc3 window out of range");
      const int w = out.num_vars_++;
      out.var_meta_.push_back({VarMeta::Kind::Slack, MeetingQuad{}, t, s});
      std::vector<Affine> atoms{affine_of(ms.cell(t, s)),
                                affine_of(ms.cell(t, s + 1)),
                                affine_of(ms.cell(t, s + 2)),
                                affine_of(ms.cell(t, s + 3)),
                                Affine{w, 0, 1}};
      add_quadratic_window(out, atoms, -2, -3, penalty);
    }
  }
  out.canonicalize();
  return out;
}

QuboModel build_model(const MeetingSet& ms, CcMode mode, int64_t penalty) {
  QuboModel q = build_break_qubo(ms);
  if (mode == CcMode::Cc2 || mode == CcMode::Cc2And3) {
    q = add_cc2_penalty(q, ms, penalty);
  }
  if (mode == CcMode::Cc3 || mode == CcMode::Cc2And3) {
    q = add_cc3_penalty(q, ms, penalty);
  }
  return q;
}

DecodeResult decode(const QuboModel& q, std::span<const uint8_t> z) {
  if (static_cast<int>(z.size()) != q.num_vars()) {
    throw std::invalid_argument("decode: bit vector length mismatch");
  }
  if (!q.has_meta() || q.n() == 0) {
    throw std::invalid_argument("decode: model has no match structure");
  }
  DecodeResult res;
  res.assignment.teams = 2 * q.n();
  res.assignment.slots = 2 * (2 * q.n() - 1);
  res.assignment.y.assign(
      static_cast<size_t>(res.assignment.teams) * res.assignment.slots, 0);
  for (int v = 0; v < q.num_vars(); ++v) {
    const VarMeta& m = q.var_meta()[v];
    if (m.kind != VarMeta::Kind::Match) continue;
    const uint8_t bit = z[v];
    res.assignment.at(m.quad.t1, m.quad.s1) = bit;
    res.assignment.at(m.quad.t2, m.quad.s1) = 1 - bit;
    res.assignment.at(m.quad.t1, m.quad.s2) = 1 - bit;
    res.assignment.at(m.quad.t2, m.quad.s2) = bit;
  }
  res.breaks = count_breaks(res.assignment);
  res.penalty_value = q.objective(z) - res.breaks;
  if (q.cc_mode() == CcMode::Cc2 || q.cc_mode() == CcMode::Cc2And3) {
    res.cc.emplace_back(2, check_cc(res.assignment, 2));
  }
  if (q.cc_mode() == CcMode::Cc3 || q.cc_mode() == CcMode::Cc2And3) {
    res.cc.emplace_back(3, check_cc(res.assignment, 3));
  }
  return res;
}

MeetingSet meeting_set_from_meta(const QuboModel& q) {
  if (!q.has_meta() || q.n() < 2) {
    throw std::invalid_argument("model carries no match structure");
  }
  MeetingSet ms;
  ms.n = q.n();
  bool saw_slack = false;
  for (const VarMeta& m : q.var_meta()) {
    if (m.kind == VarMeta::Kind::Slack) {
      saw_slack = true;
      continue;
    }
    if (saw_slack) {
      throw std::invalid_argument("match variable after a slack variable");
    }
    const MeetingQuad& quad = m.quad;
    if (quad.t1 < 1 || quad.t1 >= quad.t2 || quad.t2 > ms.teams() ||
        quad.s1 < 1 || quad.s1 >= quad.s2 || quad.s2 > ms.slots()) {
      throw std::invalid_argument("meeting quad out of range");
    }
    ms.quads.push_back(quad);
  }
  ms.cells.assign(static_cast<size_t>(ms.teams()) * ms.slots(), CellRef{});
  auto place = [&ms](int t, int s, int var, bool negated) {
    CellRef& c = ms.cells[static_cast<size_t>(t - 1) * ms.slots() + (s - 1)];
    if (c.var != -1) {
      throw std::invalid_argument("meeting quads overlap on a cell");
    }
    c = {var, negated};
  };
  for (int v = 0; v < ms.num_vars(); ++v) {
    const MeetingQuad& quad = ms.quads[v];
    place(quad.t1, quad.s1, v, false);
    place(quad.t2, quad.s1, v, true);
    place(quad.t1, quad.s2, v, true);
    place(quad.t2, quad.s2, v, false);
  }
  for (const CellRef& c : ms.cells) {
    if (c.var == -1) {
      throw std::invalid_argument("meeting quads do not cover every cell");
    }
  }
  return ms;
}

std::string qubo_to_text(const QuboModel& q) {
  std::ostringstream os;
  os << "p qubo " << q.num_vars() << ' ' << q.terms().size() << ' '
     << q.offset() << '\n';
  for (const auto& [key, c] : q.terms()) {
    os << key.first + 1 << ' ' << key.second + 1 << ' ' << c << '\n';
  }
  return os.str();
}

std::string qubo_meta_to_json(const QuboModel& q) {
  nlohmann::json vars = nlohmann::json::array();
  for (const VarMeta& m : q.var_meta()) {
    nlohmann::json v;
    if (m.kind == VarMeta::Kind::Match) {
      v["kind"] = "match";
      v["quad"] = {m.quad.t1, m.quad.t2, m.quad.s1, m.quad.s2};
    } else {
      v["kind"] = "slack";
      v["team"] = m.team;
      v["slot"] = m.slot;
    }
    vars.push_back(std::move(v));
  }
  nlohmann::json j;
  j["cc_mode"] = to_string(q.cc_mode());
  j["n"] = q.n();
  j["num_vars"] = q.num_vars();
  j["penalty"] = q.penalty();
  j["vars"] = std::move(vars);
  return j.dump();
}

QuboModel qubo_from_text(const std::string& text, const std::string& meta_json) {
  std::istringstream in(text);
  std::string p, kind;
  int num_vars = 0;
  size_t num_terms = 0;
  int64_t offset = 0;
  if (!(in >> p >> kind >> num_vars >> num_terms >> offset) || p != "p" ||
      kind != "qubo" || num_vars < 0) {
    throw ParseError("qubo text: bad header, expected 'p qubo <vars> <terms> <offset>'");
  }
  QuboModel q = QuboModel::generic(num_vars);
  q.offset_ = offset;
  for (size_t k = 0; k < num_terms; ++k) {
    int i = 0, j = 0;
    int64_t c = 0;
    if (!(in >> i >> j >> c)) throw ParseError("qubo text: truncated term list");
    if (i < 1 || j < i || j > num_vars) {
      throw ParseError("qubo text: term indices out of range at line " +
                       std::to_string(k + 2));
    }
    q.add_term(i - 1, j - 1, c);
  }
  if (meta_json.empty()) return q;

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(meta_json);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("qubo meta JSON: ") + e.what());
  }
  try {
    q.n_ = j.at("n").get<int>();
    q.penalty_ = j.at("penalty").get<int64_t>();
    q.cc_mode_ = cc_mode_from_string(j.at("cc_mode").get<std::string>());
    if (j.at("num_vars").get<int>() != num_vars) {
      throw ParseError("qubo meta JSON: variable count disagrees with qubo text");
    }
    for (const auto& v : j.at("vars")) {
      VarMeta m;
      if (v.at("kind") == "match") {
        const auto& quad = v.at("quad");
        m.kind = VarMeta::Kind::Match;
        m.quad = {quad.at(0).get<int>(), quad.at(1).get<int>(),
                  quad.at(2).get<int>(), quad.at(3).get<int>()};
      } else if (v.at("kind") == "slack") {
        m.kind = VarMeta::Kind::Slack;
        m.team = v.at("team").get<int>();
        m.slot = v.at("slot").get<int>();
      } else {
        throw ParseError("qubo meta JSON: unknown variable kind");
      }
      q.var_meta_.push_back(m);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("qubo meta JSON: ") + e.what());
  }
  if (static_cast<int>(q.var_meta_.size()) != num_vars) {
    throw ParseError("qubo meta JSON: variable tag count disagrees with qubo text");
  }
  return q;
}

void save_qubo(const QuboModel& q, const std::string& path, const std::string& meta_path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << qubo_to_text(q);
  if (!meta_path.empty()) {
    std::ofstream meta(meta_path, std::ios::binary);
    if (!meta) throw IoError("cannot write " + meta_path);
    meta << qubo_meta_to_json(q) << '\n';
  }
}

QuboModel load_qubo(const std::string& path, const std::string& meta_path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string meta;
  if (!meta_path.empty()) {
    std::ifstream min(meta_path);
    if (!min) throw IoError("cannot open " + meta_path);
    std::ostringstream mbuf;
    mbuf << min.rdbuf();
    meta = mbuf.str();
  }
  return qubo_from_text(buf.str(), meta);
}

}  // namespace breakqubo
