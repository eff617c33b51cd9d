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
#include <vector>

#include "assignment.hpp"
#include "tournament.hpp"

namespace breakqubo::fixtures {

// The classic four-team mirrored double round robin used as the worked
// reference example throughout the tests (n = 2, slots 1..6, second half
// repeating the first).
inline Timetable reference_timetable() {
  Timetable tt;
  tt.n = 2;
  tt.opp = {
      2, 3, 4, 2, 3, 4,  // team 1
      1, 4, 3, 1, 4, 3,  // team 2
      4, 1, 2, 4, 1, 2,  // team 3
      3, 2, 1, 3, 2, 1,  // team 4
  };
  return tt;
}

// A break-optimal home/away matrix for the reference timetable: 6 breaks
// (team 2 at slots 2, 4, 5 and team 3 at slots 2, 4, 5).
inline HAAssignment reference_assignment() {
  HAAssignment ha;
  ha.teams = 4;
  ha.slots = 6;
  ha.y = {
      1, 0, 1, 0, 1, 0,  // team 1
      0, 0, 1, 1, 1, 0,  // team 2
      1, 1, 0, 0, 0, 1,  // team 3
      0, 1, 0, 1, 0, 1,  // team 4
  };
  return ha;
}

// Orientation bits that decode to reference_assignment() under the fixed
// quad order (1,2,1,4) (1,3,2,5) (1,4,3,6) (2,3,3,6) (2,4,2,5) (3,4,1,4).
inline std::vector<uint8_t> reference_bits() { return {1, 0, 1, 1, 0, 1}; }

}  // namespace breakqubo::fixtures
