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

#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace breakqubo::oracle {

namespace {

struct Pair {
  int t1, t2, s1, s2;  // t1 < t2 meet at slots s1 < s2
};

// Reads the pair list straight off the opponent table.
std::vector<Pair> pair_list(const Timetable& tt) {
  std::vector<Pair> pairs;
  for (int t1 = 1; t1 <= tt.teams(); ++t1) {
    for (int t2 = t1 + 1; t2 <= tt.teams(); ++t2) {
      int s1 = 0, s2 = 0;
      for (int s = 1; s <= tt.slots(); ++s) {
        if (tt.at(t1, s) == t2) {
          if (s1 == 0) {
            s1 = s;
          } else {
            s2 = s;
          }
        }
      }
      if (s1 == 0 || s2 == 0) {
        throw std::invalid_argument("timetable: pair does not meet twice");
      }
      pairs.push_back({t1, t2, s1, s2});
    }
  }
  return pairs;
}

int64_t scan_breaks(const std::vector<uint8_t>& y, int teams, int slots) {
  int64_t breaks = 0;
  for (int t = 0; t < teams; ++t) {
    const uint8_t* row = y.data() + static_cast<size_t>(t) * slots;
    for (int s = 1; s < slots; ++s) breaks += row[s] == row[s - 1];
  }
  return breaks;
}

// True when no maximal constant run in any row exceeds u.
bool within_run_limit(const std::vector<uint8_t>& y, int teams, int slots,
                      int u) {
  for (int t = 0; t < teams; ++t) {
    const uint8_t* row = y.data() + static_cast<size_t>(t) * slots;
    int run = 1;
    for (int s = 1; s < slots; ++s) {
      run = row[s] == row[s - 1] ? run + 1 : 1;
      if (run > u) return false;
    }
  }
  return true;
}

}  // namespace

Outcome enumerate_assignments(const Timetable& tt,
                              const std::vector<int>& cc_levels) {
  for (int u : cc_levels) {
    if (u != 2 && u != 3) {
      throw std::invalid_argument("cc level must be 2 or 3");
    }
  }
  const std::vector<Pair> pairs = pair_list(tt);
  if (pairs.size() > 24) {
    throw std::invalid_argument("timetable too large to enumerate");
  }
  const int teams = tt.teams();
  const int slots = tt.slots();
  Outcome out;
  std::vector<uint8_t> y(static_cast<size_t>(teams) * slots, 0);
  const uint64_t total = 1ull << pairs.size();
  for (uint64_t mask = 0; mask < total; ++mask) {
    for (size_t k = 0; k < pairs.size(); ++k) {
      const Pair& p = pairs[k];
      const uint8_t o = (mask >> k) & 1u;
      // First meeting: t1 at home iff o; second meeting swaps orientation.
      y[static_cast<size_t>(p.t1 - 1) * slots + (p.s1 - 1)] = o;
      y[static_cast<size_t>(p.t2 - 1) * slots + (p.s1 - 1)] = 1 - o;
      y[static_cast<size_t>(p.t1 - 1) * slots + (p.s2 - 1)] = 1 - o;
      y[static_cast<size_t>(p.t2 - 1) * slots + (p.s2 - 1)] = o;
    }
    bool ok = true;
    for (int u : cc_levels) {
      if (!within_run_limit(y, teams, slots, u)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    const int64_t breaks = scan_breaks(y, teams, slots);
    if (!out.feasible || breaks < out.min_breaks) {
      out.feasible = true;
      out.min_breaks = breaks;
      out.best_y = y;
      out.optimal_count = 1;
    } else if (breaks == out.min_breaks) {
      ++out.optimal_count;
      if (std::lexicographical_compare(y.begin(), y.end(), out.best_y.begin(),
                                       out.best_y.end())) {
        out.best_y = y;
      }
    }
  }
  return out;
}

}  // namespace breakqubo::oracle
