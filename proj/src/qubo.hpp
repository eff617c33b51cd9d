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

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "assignment.hpp"
#include "tournament.hpp"

namespace breakqubo {

enum class CcMode { None, Cc2, Cc3, Cc2And3 };

std::string to_string(CcMode mode);
CcMode cc_mode_from_string(const std::string& name);

/// What a model variable stands for: the orientation of one meeting quad, or
/// one CC(3) slack attached to a (team, window start slot) pair.
struct VarMeta {
  enum class Kind { Match, Slack };
  Kind kind = Kind::Match;
  MeetingQuad quad{};  // Match
  int team = 0;        // Slack
  int slot = 0;        // Slack
  bool operator==(const VarMeta&) const = default;
};

/// Sparse integer quadratic form over binary variables:
///   objective(z) = offset + sum_i terms(i,i) z_i + sum_{i<j} terms(i,j) z_i z_j
/// All arithmetic is integer, so evaluation is bit-exact. Variable order is
/// fixed: match variables first (lexicographic quad order), then slacks in
/// (team, slot) order. Models without per-variable metadata are "generic";
/// they can be solved but not decoded back to an assignment.
class QuboModel {
 public:
  int num_vars() const { return num_vars_; }
  int64_t offset() const { return offset_; }
  int64_t penalty() const { return penalty_; }
  CcMode cc_mode() const { return cc_mode_; }
  int n() const { return n_; }

  const std::map<std::pair<int, int>, int64_t>& terms() const { return terms_; }
  const std::vector<VarMeta>& var_meta() const { return var_meta_; }
  bool has_meta() const { return !var_meta_.empty(); }
  int num_match_vars() const;
  int num_slack_vars() const;

  int64_t objective(std::span<const uint8_t> z) const;

  /// Adds c * z_i * z_j (c * z_i when i == j). Indices are 0-based; (i, j)
  /// is normalized to i <= j and coefficients on the same key are summed.
  void add_term(int i, int j, int64_t c);
  void add_offset(int64_t c) { offset_ += c; }

  /// Drops zero-coefficient entries so structurally equal models compare equal.
  void canonicalize();

  bool operator==(const QuboModel&) const = default;

  // Construction helpers; see the free builder functions below.
  static QuboModel generic(int num_vars);

 private:
  friend QuboModel build_break_qubo(const MeetingSet&);
  friend QuboModel add_cc2_penalty(const QuboModel&, const MeetingSet&, int64_t);
  friend QuboModel add_cc3_penalty(const QuboModel&, const MeetingSet&, int64_t);
  friend QuboModel qubo_from_text(const std::string&, const std::string&);

  int num_vars_ = 0;
  int n_ = 0;  // 0 for generic models
  int64_t offset_ = 0;
  int64_t penalty_ = 0;  // 0 when unconstrained
  CcMode cc_mode_ = CcMode::None;
  std::map<std::pair<int, int>, int64_t> terms_;
  std::vector<VarMeta> var_meta_;
};

/// The unconstrained break objective over the quad orientation variables:
/// objective(z) equals the break count of the decoded assignment, for every
/// bit vector z. Throws if an adjacent cell pair shares a variable (cannot
/// happen for a mirrored schedule; guarded anyway).
QuboModel build_break_qubo(const MeetingSet& ms);

/// Adds P * (S-1)(S-2) per window, S = y(t,s) + y(t,s+1) + y(t,s+2) over
/// (t, s) in teams x {1..2n-1}. No new variables. P >= 1.
QuboModel add_cc2_penalty(const QuboModel& q, const MeetingSet& ms, int64_t penalty);

/// Appends one slack variable per window and adds P * (S'-2)(S'-3), where
/// S' = y(t,s)+...+y(t,s+3) + w(t,s). P >= 1.
QuboModel add_cc3_penalty(const QuboModel& q, const MeetingSet& ms, int64_t penalty);

/// One-stop builder for a timetable's model in the given mode.
QuboModel build_model(const MeetingSet& ms, CcMode mode, int64_t penalty);

struct DecodeResult {
  HAAssignment assignment;
  int64_t breaks = 0;
  int64_t penalty_value = 0;  // objective(z) - breaks; >= 0 by construction
  // CC violations of the decoded assignment per active constraint level.
  std::vector<std::pair<int, std::vector<CcViolation>>> cc;
};

/// Rebuilds the assignment from the match bits (slack bits are ignored for Y)
/// and splits the objective into break count plus penalty part, exactly.
DecodeResult decode(const QuboModel& q, std::span<const uint8_t> z);

/// Rebuilds the meeting set recorded in the model's variable metadata: match
/// variables must come first, their quads must be in range and tile the
/// (team, slot) grid exactly. Throws std::invalid_argument otherwise.
MeetingSet meeting_set_from_meta(const QuboModel& q);

/// Line-oriented text export: "p qubo <num_vars> <num_terms> <offset>" then
/// one "i j c" triple per stored term, 1-indexed, i <= j. The metadata
/// sidecar (JSON) carries n, penalty, cc mode and per-variable tags; pass an
/// empty meta string to qubo_from_text for a generic model.
std::string qubo_to_text(const QuboModel& q);
std::string qubo_meta_to_json(const QuboModel& q);
QuboModel qubo_from_text(const std::string& text, const std::string& meta_json);

void save_qubo(const QuboModel& q, const std::string& path, const std::string& meta_path);
QuboModel load_qubo(const std::string& path, const std::string& meta_path);

}  // namespace breakqubo
