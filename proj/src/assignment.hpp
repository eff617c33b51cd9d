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
#include <string>
#include <vector>

#include "tournament.hpp"

namespace breakqubo {

/// Home-away matrix: y(t,s) = 1 when team t plays at home in slot s.
struct HAAssignment {
  int teams = 0;
  int slots = 0;
  std::vector<uint8_t> y;  // row-major, 0/1

  uint8_t at(int team, int slot) const { return y[(team - 1) * slots + (slot - 1)]; }
  uint8_t& at(int team, int slot) { return y[(team - 1) * slots + (slot - 1)]; }

  bool operator==(const HAAssignment&) const = default;
};

/// A maximal home stand or road trip longer than the allowed length.
struct CcViolation {
  int team;
  int start_slot;
  int run_length;
  bool operator==(const CcViolation&) const = default;
};

/// Total number of breaks: pairs (t, s) with s >= 2 and y(t,s-1) = y(t,s).
int64_t count_breaks(const HAAssignment& ha);

/// True iff every meeting quad's 2x2 submatrix of Y is one of the two
/// admissible patterns (home/away opposed within each match, orientation
/// swapped between the two matches of the pair).
bool check_consistency(const HAAssignment& ha, const MeetingSet& ms);

/// All maximal constant runs of length > u, scanning the full slot range.
/// u must be 2 or 3.
std::vector<CcViolation> check_cc(const HAAssignment& ha, int u);

HAAssignment complement(const HAAssignment& ha);

/// Combined consistency / break / CC(u) report for one assignment.
struct FeasibilityReport {
  bool consistent = false;
  int64_t breaks = 0;
  // One entry per requested u, in request order.
  std::vector<std::pair<int, std::vector<CcViolation>>> cc;
};

FeasibilityReport analyze_assignment(const HAAssignment& ha, const MeetingSet& ms,
                                     const std::vector<int>& cc_levels);

/// JSON form: {"y": [[0|1,...],...]}.
std::string assignment_to_json(const HAAssignment& ha);
HAAssignment assignment_from_json(const std::string& text);
HAAssignment load_assignment(const std::string& path);
void save_assignment(const HAAssignment& ha, const std::string& path);

}  // namespace breakqubo
