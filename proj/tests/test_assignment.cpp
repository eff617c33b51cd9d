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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "assignment.hpp"
#include "errors.hpp"
#include "fixtures.hpp"
#include "tournament.hpp"

using namespace breakqubo;

TEST_CASE("reference assignment has exactly six breaks") {
  HAAssignment ha = fixtures::reference_assignment();
  CHECK(count_breaks(ha) == 6);
  // Teams 2 and 3 break at slots 2, 4 and 5; teams 1 and 4 alternate.
  HAAssignment alternating = ha;
  for (int s = 1; s <= 6; ++s) {
    alternating.at(2, s) = ha.at(1, s);
    alternating.at(3, s) = ha.at(4, s);
  }
  CHECK(count_breaks(alternating) == 0);
}

TEST_CASE("consistency accepts the reference pair and rejects tampering") {
  MeetingSet ms = extract_meetings(fixtures::reference_timetable());
  HAAssignment ha = fixtures::reference_assignment();
  CHECK(check_consistency(ha, ms));

  SUBCASE("both teams at home in one match") {
    ha.at(2, 1) = 1;  // teams 1 and 2 meet at slot 1
    CHECK(!check_consistency(ha, ms));
  }
  SUBCASE("same orientation in both meetings of a pair") {
    ha.at(1, 4) = 1;  // 1 hosted 2 at slot 1 already
    ha.at(2, 4) = 0;
    CHECK(!check_consistency(ha, ms));
  }
}

TEST_CASE("complement flips every cell and preserves structure") {
  MeetingSet ms = extract_meetings(fixtures::reference_timetable());
  HAAssignment ha = fixtures::reference_assignment();
  HAAssignment co = complement(ha);
  CHECK(co != ha);
  CHECK(complement(co) == ha);
  CHECK(count_breaks(co) == count_breaks(ha));
  CHECK(check_consistency(co, ms));
}

TEST_CASE("run scanning reports maximal overlong runs with coordinates") {
  HAAssignment ha = fixtures::reference_assignment();

  SUBCASE("limit 2: the two three-in-a-row stretches surface") {
    auto v = check_cc(ha, 2);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == CcViolation{2, 3, 3});  // team 2 home at slots 3..5
    CHECK(v[1] == CcViolation{3, 3, 3});  // team 3 away at slots 3..5
  }
  SUBCASE("limit 3: nothing to report") { CHECK(check_cc(ha, 3).empty()); }
  SUBCASE("runs crossing the half boundary are seen whole") {
    HAAssignment block = ha;
    // Team 1: 1 0 0 0 0 1 has a maximal away run of four at slots 2..5.
    block.at(1, 3) = 0;
    block.at(1, 5) = 0;
    block.at(1, 6) = 1;
    auto v3 = check_cc(block, 3);
    REQUIRE(v3.size() == 1);
    CHECK(v3[0] == CcViolation{1, 2, 4});
    auto v2 = check_cc(block, 2);
    REQUIRE(!v2.empty());
    CHECK(v2[0] == CcViolation{1, 2, 4});
  }
  SUBCASE("only levels 2 and 3 are accepted") {
    CHECK_THROWS_AS(check_cc(ha, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_cc(ha, 4), std::invalid_argument);
  }
}

TEST_CASE("combined report glues consistency, breaks and run checks") {
  MeetingSet ms = extract_meetings(fixtures::reference_timetable());
  HAAssignment ha = fixtures::reference_assignment();
  FeasibilityReport rep = analyze_assignment(ha, ms, {2, 3});
  CHECK(rep.consistent);
  CHECK(rep.breaks == 6);
  REQUIRE(rep.cc.size() == 2);
  CHECK(rep.cc[0].first == 2);
  CHECK(rep.cc[0].second.size() == 2);
  CHECK(rep.cc[1].first == 3);
  CHECK(rep.cc[1].second.empty());
}

TEST_CASE("assignment json round trips exactly") {
  HAAssignment ha = fixtures::reference_assignment();
  CHECK(assignment_from_json(assignment_to_json(ha)) == ha);

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "breakqubo_test_assign";
  fs::create_directories(dir);
  const std::string path = (dir / "y.json").string();
  save_assignment(ha, path);
  CHECK(load_assignment(path) == ha);
  fs::remove_all(dir);
}

TEST_CASE("assignment json parser enforces shape and values") {
  CHECK_THROWS_AS(assignment_from_json("nope"), ParseError);
  CHECK_THROWS_AS(assignment_from_json("{}"), ParseError);
  CHECK_THROWS_AS(assignment_from_json(R"({"y": []})"), ParseError);
  CHECK_THROWS_AS(assignment_from_json(R"({"y": [[0,1],[1]]})"), ParseError);
  CHECK_THROWS_AS(assignment_from_json(R"({"y": [[0,2],[1,0]]})"), ParseError);
  CHECK_THROWS_AS(load_assignment("/nonexistent/path/y.json"), IoError);
}
