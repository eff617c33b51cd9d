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
#include <optional>
#include <span>
#include <vector>

#include "qubo.hpp"

namespace breakqubo {

/// Team-wise view of a tournament QUBO. The whole objective splits into one
/// share per team: the team's adjacent-slot break terms (interior first-half
/// edges count twice by mirroring, the half boundary once) plus its penalty
/// windows. Every variable appears in exactly two team shares (the two teams
/// of its quad) except slacks, which appear in one. Summing per-team minima
/// over a
/// partial fixing therefore gives an admissible integer lower bound, and an
/// exact value once every match variable is fixed.
///
/// A structure is only handed out when re-expanding it reproduces the model's
/// polynomial exactly, so the bound is always sound for the model it came from.
class ModelStructure {
 public:
  /// Rebuilds the structure from the model's variable metadata. Returns
  /// nullopt for generic models or when the metadata does not reproduce the
  /// stored terms (e.g. hand-edited coefficients).
  static std::optional<ModelStructure> recover(const QuboModel& q);

  int n() const { return n_; }
  int teams() const { return 2 * n_; }
  int positions() const { return 2 * n_ - 1; }  // first-half slots
  int num_vars() const { return num_vars_; }
  int num_match_vars() const { return num_match_vars_; }
  bool has_cc2() const { return cc2_; }
  bool has_cc3() const { return cc3_; }
  int64_t penalty() const { return penalty_; }

  /// Teams whose share involves variable v (1-indexed team ids).
  const std::vector<int>& teams_of_var(int v) const { return var_teams_[v]; }

  /// Exact minimum of one team's share given a partial fixing
  /// (fixed[v] in {-1 free, 0, 1}).
  int64_t team_min(int team, std::span<const int8_t> fixed) const;

  /// Sum of team minima: admissible lower bound for the whole objective.
  int64_t bound(std::span<const int8_t> fixed) const;

  /// Team's share at a complete match assignment with free slacks minimized
  /// (equals team_min when every match variable of the team is fixed).
  int64_t team_value(int team, std::span<const int8_t> fixed) const {
    return team_min(team, fixed);
  }

  /// Slack variable id of window (team, s), or -1 when the model has no
  /// CC(3) block.
  int slack_var(int team, int s) const {
    return cc3_ ? slack_base_ + (team - 1) * positions() + (s - 1) : -1;
  }

  /// Optimal CC(3) slack bit for a window whose four cells sum to sum4
  /// (ties resolved to 0).
  static uint8_t best_slack_bit(int sum4) { return sum4 <= 1 ? 1 : 0; }

  /// First-half cell (team, position p in 1..2n-1); the mirrored second-half
  /// cell is the complement of this one.
  const CellRef& cell(int team, int p) const {
    return team_cells_[team - 1][p - 1];
  }

  /// y(team, sigma) under bit vector z, sigma in 1..2(2n-1) (second half by
  /// mirroring).
  int cell_value(std::span<const uint8_t> z, int team, int sigma) const {
    const int L = positions();
    const bool mirrored = sigma > L;
    const CellRef& c = cell(team, mirrored ? sigma - L : sigma);
    const int y = c.negated ? 1 - z[c.var] : z[c.var];
    return mirrored ? 1 - y : y;
  }

  /// Overwrites every slack bit of z with its optimal value for z's match
  /// bits (no-op for models without slacks).
  void complete_slacks(std::vector<uint8_t>& z) const;

 private:
  int n_ = 0;
  int num_vars_ = 0;
  int num_match_vars_ = 0;
  int slack_base_ = 0;
  int64_t penalty_ = 0;
  bool cc2_ = false;
  bool cc3_ = false;
  std::vector<std::vector<CellRef>> team_cells_;  // [team-1][pos-1]
  std::vector<std::vector<int>> var_teams_;

  int64_t team_min_enumerate(int team, std::span<const int8_t> fixed) const;
  int64_t team_min_dp(int team, std::span<const int8_t> fixed) const;
};

/// True when objective(z) == objective(1-z) identically (checked on the
/// coefficients, not by sampling). Unconstrained and penalized tournament
/// models all have this symmetry; solvers may exploit it to halve the search.
bool is_complement_invariant(const QuboModel& q);

}  // namespace breakqubo
