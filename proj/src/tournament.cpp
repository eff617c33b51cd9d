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

#include "tournament.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "json.hpp"
#include "rng.hpp"

namespace breakqubo {

namespace {

std::string kind_name(TimetableViolation::Kind k) {
  switch (k) {
    case TimetableViolation::Kind::EntryRange:     return "entry-range";
    case TimetableViolation::Kind::Involution:     return "involution";
    case TimetableViolation::Kind::RowPermutation: return "row-permutation";
    case TimetableViolation::Kind::Mirror:         return "mirror";
  }
  return "?";
}

// Shared by the half and full validators: opponents in range, pairing
// involution per slot, each row a permutation of the other teams over
// [slot_lo, slot_hi].
template <typename Table>
void check_block(const Table& tab, int slot_lo, int slot_hi,
                 std::vector<TimetableViolation>& out) {
  const int teams = tab.teams();
  for (int t = 1; t <= teams; ++t) {
    for (int s = slot_lo; s <= slot_hi; ++s) {
      int o = tab.at(t, s);
      if (o < 1 || o > teams || o == t) {
        out.push_back({TimetableViolation::Kind::EntryRange, t, s,
                       "opponent " + std::to_string(o) + " out of range"});
      } else if (tab.at(o, s) != t) {
        out.push_back({TimetableViolation::Kind::Involution, t, s,
                       "tau(" + std::to_string(o) + "," + std::to_string(s) +
                           ") = " + std::to_string(tab.at(o, s)) +
                           ", expected " + std::to_string(t)});
      }
    }
    std::vector<int> seen(teams + 1, 0);
    bool ok = true;
    for (int s = slot_lo; s <= slot_hi; ++s) {
      int o = tab.at(t, s);
      if (o < 1 || o > teams || o == t || seen[o]++) ok = false;
    }
    if (!ok) {
      out.push_back({TimetableViolation::Kind::RowPermutation, t, slot_lo,
                     "slots " + std::to_string(slot_lo) + ".." +
                         std::to_string(slot_hi) +
                         " are not a permutation of the other teams"});
    }
  }
}

}  // namespace

std::string to_string(const TimetableViolation& v) {
  std::ostringstream os;
  os << kind_name(v.kind) << " at (team " << v.team << ", slot " << v.slot
     << "): " << v.detail;
  return os.str();
}

SrrtHalf generate_srrt(int n) {
  if (n < 2) throw std::invalid_argument("generate_srrt: n must be >= 2");
  SrrtHalf half;
  half.n = n;
  const int teams = 2 * n;
  const int m = 2 * n - 1;
  half.opp.assign(static_cast<size_t>(teams) * m, 0);
  for (int r = 1; r <= m; ++r) {
    half.at(teams, r) = r;
    half.at(r, r) = teams;
    for (int i = 1; i <= m; ++i) {
      if (i == r) continue;
      int j = ((2 * r - i - 1) % m + m) % m + 1;
      half.at(i, r) = j;
    }
  }
  return half;
}

std::vector<TimetableViolation> validate_srrt(const SrrtHalf& half) {
  std::vector<TimetableViolation> out;
  if (half.n < 2) {
    out.push_back({TimetableViolation::Kind::EntryRange, 0, 0, "n < 2"});
    return out;
  }
  if (half.opp.size() != static_cast<size_t>(half.teams()) * half.slots()) {
    out.push_back({TimetableViolation::Kind::EntryRange, 0, 0,
                   "opponent table has the wrong shape"});
    return out;
  }
  check_block(half, 1, half.slots(), out);
  return out;
}

Timetable build_mdrrt(const SrrtHalf& half, std::optional<uint64_t> shuffle_seed) {
  auto violations = validate_srrt(half);
  if (!violations.empty()) {
    throw std::invalid_argument("build_mdrrt: invalid half timetable: " +
                                to_string(violations.front()));
  }
  const int m = half.slots();
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 1);
  if (shuffle_seed) seeded_shuffle(order, *shuffle_seed);

  Timetable tt;
  tt.n = half.n;
  tt.opp.assign(static_cast<size_t>(tt.teams()) * tt.slots(), 0);
  for (int t = 1; t <= tt.teams(); ++t) {
    for (int s = 1; s <= m; ++s) {
      int o = half.at(t, order[s - 1]);
      tt.at(t, s) = o;
      tt.at(t, s + m) = o;
    }
  }
  return tt;
}

Timetable generate_mdrrt(int n, std::optional<uint64_t> shuffle_seed) {
  return build_mdrrt(generate_srrt(n), shuffle_seed);
}

MeetingSet extract_meetings(const Timetable& tt) {
  MeetingSet ms;
  ms.n = tt.n;
  std::map<std::pair<int, int>, std::vector<int>> meetings;
  for (int t = 1; t <= tt.teams(); ++t) {
    for (int s = 1; s <= tt.slots(); ++s) {
      int o = tt.at(t, s);
      if (o > t) meetings[{t, o}].push_back(s);
    }
  }
  for (const auto& [pair, slots] : meetings) {
    if (slots.size() != 2) {
      throw std::invalid_argument(
          "extract_meetings: teams " + std::to_string(pair.first) + " and " +
          std::to_string(pair.second) + " meet " +
          std::to_string(slots.size()) + " times, expected 2");
    }
    ms.quads.push_back({pair.first, pair.second, slots[0], slots[1]});
  }
  std::sort(ms.quads.begin(), ms.quads.end());

  ms.cells.assign(static_cast<size_t>(ms.teams()) * ms.slots(), CellRef{});
  auto cell = [&ms](int t, int s) -> CellRef& {
    return ms.cells[(t - 1) * ms.slots() + (s - 1)];
  };
  auto place = [&](int t, int s, int var, bool negated) {
    CellRef& c = cell(t, s);
    if (c.var != -1) {
      throw std::invalid_argument("extract_meetings: cell (" +
                                  std::to_string(t) + "," + std::to_string(s) +
                                  ") belongs to two quads");
    }
    c = {var, negated};
  };
  for (int v = 0; v < ms.num_vars(); ++v) {
    const MeetingQuad& q = ms.quads[v];
    place(q.t1, q.s1, v, false);
    place(q.t2, q.s1, v, true);
    place(q.t1, q.s2, v, true);
    place(q.t2, q.s2, v, false);
  }
  for (const CellRef& c : ms.cells) {
    if (c.var == -1) {
      throw std::invalid_argument(
          "extract_meetings: cell index is not total; timetable is not a "
          "valid DRRT");
    }
  }
  return ms;
}

std::vector<TimetableViolation> validate_timetable(const Timetable& tt) {
  std::vector<TimetableViolation> out;
  if (tt.n < 2) {
    out.push_back({TimetableViolation::Kind::EntryRange, 0, 0, "n < 2"});
    return out;
  }
  if (tt.opp.size() != static_cast<size_t>(tt.teams()) * tt.slots()) {
    out.push_back({TimetableViolation::Kind::EntryRange, 0, 0,
                   "opponent table has the wrong shape"});
    return out;
  }
  const int m = tt.half_slots();
  check_block(tt, 1, m, out);
  check_block(tt, m + 1, 2 * m, out);
  for (int t = 1; t <= tt.teams(); ++t) {
    for (int s = 1; s <= m; ++s) {
      if (tt.at(t, s) != tt.at(t, s + m)) {
        out.push_back({TimetableViolation::Kind::Mirror, t, s,
                       "tau(t," + std::to_string(s) + ") = " +
                           std::to_string(tt.at(t, s)) + " but tau(t," +
                           std::to_string(s + m) + ") = " +
                           std::to_string(tt.at(t, s + m))});
      }
    }
  }
  return out;
}

std::string timetable_to_json(const Timetable& tt) {
  nlohmann::json rows = nlohmann::json::array();
  for (int t = 1; t <= tt.teams(); ++t) {
    nlohmann::json row = nlohmann::json::array();
    for (int s = 1; s <= tt.slots(); ++s) row.push_back(tt.at(t, s));
    rows.push_back(std::move(row));
  }
  nlohmann::json j;
  j["n"] = tt.n;
  j["tau"] = std::move(rows);
  return j.dump();
}

Timetable timetable_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("timetable JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("tau") ||
      !j["n"].is_number_integer() || !j["tau"].is_array()) {
    throw ParseError("timetable JSON: expected {\"n\": int, \"tau\": [[...]]}");
  }
  Timetable tt;
  tt.n = j["n"].get<int>();
  if (tt.n < 2) throw ParseError("timetable JSON: n must be >= 2");
  const size_t teams = static_cast<size_t>(tt.teams());
  const size_t slots = static_cast<size_t>(tt.slots());
  const auto& rows = j["tau"];
  if (rows.size() != teams) {
    throw ParseError("timetable JSON: expected " + std::to_string(teams) +
                     " rows, got " + std::to_string(rows.size()));
  }
  tt.opp.reserve(teams * slots);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != slots) {
      throw ParseError("timetable JSON: every row needs " +
                       std::to_string(slots) + " entries");
    }
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) {
        throw ParseError("timetable JSON: opponents must be integers");
      }
      tt.opp.push_back(cell.get<int>());
    }
  }
  return tt;
}

Timetable load_timetable(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return timetable_from_json(buf.str());
}

void save_timetable(const Timetable& tt, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << timetable_to_json(tt) << '\n';
}

}  // namespace breakqubo
