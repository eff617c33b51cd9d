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
#include <string>
#include <vector>

namespace breakqubo {

// Teams and slots are 1-indexed throughout, matching the usual tabular
// presentation of round-robin schedules.

/// Opponent table of a single round robin over 2n teams and 2n-1 slots.
struct SrrtHalf {
  int n = 0;
  std::vector<int> opp;  // row-major, teams() x slots()

  int teams() const { return 2 * n; }
  int slots() const { return 2 * n - 1; }

  int at(int team, int slot) const { return opp[(team - 1) * slots() + (slot - 1)]; }
  int& at(int team, int slot) { return opp[(team - 1) * slots() + (slot - 1)]; }
};

/// Opponent table of a mirrored double round robin: 2n teams, 2(2n-1) slots,
/// where the second half repeats the first half's pairings slot by slot.
struct Timetable {
  int n = 0;
  std::vector<int> opp;  // row-major, teams() x slots()

  int teams() const { return 2 * n; }
  int slots() const { return 2 * (2 * n - 1); }
  int half_slots() const { return 2 * n - 1; }

  int at(int team, int slot) const { return opp[(team - 1) * slots() + (slot - 1)]; }
  int& at(int team, int slot) { return opp[(team - 1) * slots() + (slot - 1)]; }

  bool operator==(const Timetable&) const = default;
};

/// One violated timetable invariant, with the offending coordinates
/// (team/slot are 0 when the violation is not tied to a single cell).
struct TimetableViolation {
  enum class Kind { EntryRange, Involution, RowPermutation, Mirror };
  Kind kind;
  int team = 0;
  int slot = 0;
  std::string detail;
};

std::string to_string(const TimetableViolation& v);

/// Both meetings of one team pair: t1 < t2 meet at slots s1 < s2.
struct MeetingQuad {
  int t1, t2, s1, s2;
  bool operator==(const MeetingQuad&) const = default;
  auto operator<=>(const MeetingQuad&) const = default;
};

/// Position of a cell (team, slot) inside its meeting quad. Each quad owns
/// one orientation variable z; `negated` marks the two cells whose home/away
/// value is the complement of z (y = 1 - z), the other two carry y = z.
struct CellRef {
  int var = -1;
  bool negated = false;
  bool operator==(const CellRef&) const = default;
};

/// The meeting set of a timetable: all quads in lexicographic order plus the
/// total cell -> (variable, polarity) index over teams x slots.
struct MeetingSet {
  int n = 0;
  std::vector<MeetingQuad> quads;  // sorted; quad i owns variable i
  std::vector<CellRef> cells;      // row-major, teams() x slots()

  int teams() const { return 2 * n; }
  int slots() const { return 2 * (2 * n - 1); }
  int num_vars() const { return static_cast<int>(quads.size()); }

  const CellRef& cell(int team, int slot) const {
    return cells[(team - 1) * slots() + (slot - 1)];
  }
};

/// Single round robin over 2n teams by the circle method with team 2n fixed:
/// in slot r team 2n meets team r, and teams i, j < 2n meet in slot r iff
/// i + j = 2r (mod 2n-1). Throws std::invalid_argument for n < 2.
SrrtHalf generate_srrt(int n);

/// Validates the single-round-robin conditions on a half table.
std::vector<TimetableViolation> validate_srrt(const SrrtHalf& half);

/// Permutes the half's slots by a seeded uniform shuffle (identity when the
/// seed is absent), then concatenates the permuted half with itself. Throws
/// std::invalid_argument naming the first violated invariant of an invalid
/// half.
Timetable build_mdrrt(const SrrtHalf& half, std::optional<uint64_t> shuffle_seed);

/// Convenience: circle-method half, optional slot shuffle, mirror concat.
Timetable generate_mdrrt(int n, std::optional<uint64_t> shuffle_seed);

/// Extracts the meeting set of a valid timetable. Quads come out sorted
/// lexicographically; the cell index covers every (team, slot) exactly once.
MeetingSet extract_meetings(const Timetable& tt);

/// Checks every timetable invariant and reports all violations with
/// coordinates. Never throws; an empty report means the table is valid.
std::vector<TimetableViolation> validate_timetable(const Timetable& tt);

/// JSON form: {"n": int, "tau": [[int,...],...]}, rows = teams, cols = slots.
std::string timetable_to_json(const Timetable& tt);

/// Parses timetable JSON. Enforces shape only (2n rows of 2(2n-1) integer
/// entries); semantic invariants are left to validate_timetable so that
/// broken tables can still be loaded and inspected. Throws ParseError.
Timetable timetable_from_json(const std::string& text);

Timetable load_timetable(const std::string& path);
void save_timetable(const Timetable& tt, const std::string& path);

}  // namespace breakqubo
