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

#include "assignment.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "json.hpp"

namespace breakqubo {

int64_t count_breaks(const HAAssignment& ha) {
  int64_t breaks = 0;
  for (int t = 1; t <= ha.teams; ++t) {
    for (int s = 2; s <= ha.slots; ++s) {
      if (ha.at(t, s - 1) == ha.at(t, s)) ++breaks;
    }
  }
  return breaks;
}

bool check_consistency(const HAAssignment& ha, const MeetingSet& ms) {
  if (ha.teams != ms.teams() || ha.slots != ms.slots()) return false;
  for (const MeetingQuad& q : ms.quads) {
    uint8_t a = ha.at(q.t1, q.s1);
    // Admissible patterns: (a, 1-a / 1-a, a) for a in {0,1}.
    if (ha.at(q.t2, q.s1) != 1 - a) return false;
    if (ha.at(q.t1, q.s2) != 1 - a) return false;
    if (ha.at(q.t2, q.s2) != a) return false;
  }
  return true;
}

std::vector<CcViolation> check_cc(const HAAssignment& ha, int u) {
  if (u != 2 && u != 3) {
    throw std::invalid_argument("check_cc: u must be 2 or 3, got " +
                                std::to_string(u));
  }
  std::vector<CcViolation> out;
  for (int t = 1; t <= ha.teams; ++t) {
    int run_start = 1;
    for (int s = 2; s <= ha.slots + 1; ++s) {
      if (s <= ha.slots && ha.at(t, s) == ha.at(t, s - 1)) continue;
      int run_len = s - run_start;
      if (run_len > u) out.push_back({t, run_start, run_len});
      run_start = s;
    }
  }
  return out;
}

HAAssignment complement(const HAAssignment& ha) {
  HAAssignment out = ha;
  for (uint8_t& b : out.y) b = 1 - b;
  return out;
}

FeasibilityReport analyze_assignment(const HAAssignment& ha, const MeetingSet& ms,
                                     const std::vector<int>& cc_levels) {
  FeasibilityReport rep;
  rep.consistent = check_consistency(ha, ms);
  rep.breaks = count_breaks(ha);
  for (int u : cc_levels) rep.cc.emplace_back(u, check_cc(ha, u));
  return rep;
}

std::string assignment_to_json(const HAAssignment& ha) {
  nlohmann::json rows = nlohmann::json::array();
  for (int t = 1; t <= ha.teams; ++t) {
    nlohmann::json row = nlohmann::json::array();
    for (int s = 1; s <= ha.slots; ++s) row.push_back(static_cast<int>(ha.at(t, s)));
    rows.push_back(std::move(row));
  }
  nlohmann::json j;
  j["y"] = std::move(rows);
  return j.dump();
}

HAAssignment assignment_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("assignment JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("y") || !j["y"].is_array() || j["y"].empty()) {
    throw ParseError("assignment JSON: expected {\"y\": [[0|1,...],...]}");
  }
  const auto& rows = j["y"];
  HAAssignment ha;
  ha.teams = static_cast<int>(rows.size());
  ha.slots = rows[0].is_array() ? static_cast<int>(rows[0].size()) : -1;
  if (ha.slots < 1) throw ParseError("assignment JSON: rows must be non-empty arrays");
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != ha.slots) {
      throw ParseError("assignment JSON: ragged rows");
    }
    for (const auto& cell : row) {
      if (!cell.is_number_integer() ||
          (cell.get<int>() != 0 && cell.get<int>() != 1)) {
        throw ParseError("assignment JSON: entries must be 0 or 1");
      }
      ha.y.push_back(static_cast<uint8_t>(cell.get<int>()));
    }
  }
  return ha;
}

HAAssignment load_assignment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return assignment_from_json(buf.str());
}

void save_assignment(const HAAssignment& ha, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << assignment_to_json(ha) << '\n';
}

}  // namespace breakqubo
