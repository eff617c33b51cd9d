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

#include <cstring>
#include <string>

#include "breakqubo.h"
#include "json.hpp"

// The C surface is exercised exactly as an embedder would use it: opaque
// handles, status codes, and strings released through bq_string_free.

namespace {

struct StringOut {
  char* s = nullptr;
  ~StringOut() { bq_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

}  // namespace

TEST_CASE("timetable generation, json and validation round trip") {
  bq_timetable* tt = nullptr;
  REQUIRE(bq_timetable_generate(3, 1, 42, &tt) == BQ_OK);
  int n = 0;
  CHECK(bq_timetable_n(tt, &n) == BQ_OK);
  CHECK(n == 3);

  StringOut json;
  REQUIRE(bq_timetable_to_json(tt, &json.s) == BQ_OK);
  bq_timetable* back = nullptr;
  REQUIRE(bq_timetable_from_json(json.s, &back) == BQ_OK);
  StringOut json2;
  REQUIRE(bq_timetable_to_json(back, &json2.s) == BQ_OK);
  CHECK(json.str() == json2.str());

  StringOut report;
  REQUIRE(bq_timetable_validate(tt, &report.s) == BQ_OK);
  CHECK(nlohmann::json::parse(report.str()).empty());

  bq_timetable_free(back);
  bq_timetable_free(tt);
}

TEST_CASE("deterministic generation per seed") {
  bq_timetable* a = nullptr;
  bq_timetable* b = nullptr;
  REQUIRE(bq_timetable_generate(4, 1, 7, &a) == BQ_OK);
  REQUIRE(bq_timetable_generate(4, 1, 7, &b) == BQ_OK);
  StringOut ja, jb;
  REQUIRE(bq_timetable_to_json(a, &ja.s) == BQ_OK);
  REQUIRE(bq_timetable_to_json(b, &jb.s) == BQ_OK);
  CHECK(ja.str() == jb.str());
  bq_timetable_free(a);
  bq_timetable_free(b);
}

TEST_CASE("invalid arguments come back as status codes with messages") {
  CHECK(bq_timetable_generate(1, 0, 0, nullptr) == BQ_ERROR_INVALID_ARGUMENT);
  bq_timetable* tt = nullptr;
  CHECK(bq_timetable_generate(1, 0, 0, &tt) == BQ_ERROR_INVALID_ARGUMENT);
  CHECK(std::strlen(bq_last_error()) > 0);
  CHECK(bq_timetable_from_json("{bad", &tt) == BQ_ERROR_PARSE);
  CHECK(bq_timetable_to_json(nullptr, nullptr) == BQ_ERROR_INVALID_ARGUMENT);
  bq_model* m = nullptr;
  CHECK(bq_model_from_text("p qubo", "", &m) == BQ_ERROR_PARSE);
  bq_maxcut* mc = nullptr;
  CHECK(bq_maxcut_from_rudy("zz", &mc) == BQ_ERROR_PARSE);
}

TEST_CASE("model build, text round trip and objective evaluation") {
  bq_timetable* tt = nullptr;
  REQUIRE(bq_timetable_generate(2, 0, 0, &tt) == BQ_OK);
  bq_model* m = nullptr;
  REQUIRE(bq_model_build(tt, "none", 0, &m) == BQ_OK);
  int nv = 0;
  REQUIRE(bq_model_num_vars(m, &nv) == BQ_OK);
  CHECK(nv == 6);

  StringOut text, meta;
  REQUIRE(bq_model_to_text(m, &text.s) == BQ_OK);
  REQUIRE(bq_model_meta_json(m, &meta.s) == BQ_OK);
  bq_model* back = nullptr;
  REQUIRE(bq_model_from_text(text.s, meta.s, &back) == BQ_OK);

  const uint8_t z[6] = {0, 0, 0, 0, 0, 0};
  int64_t v1 = 0, v2 = 0;
  REQUIRE(bq_model_objective(m, z, 6, &v1) == BQ_OK);
  REQUIRE(bq_model_objective(back, z, 6, &v2) == BQ_OK);
  CHECK(v1 == v2);
  CHECK(bq_model_objective(m, z, 5, &v1) == BQ_ERROR_INVALID_ARGUMENT);

  bq_model* cc = nullptr;
  REQUIRE(bq_model_build(tt, "cc2+cc3", 10, &cc) == BQ_OK);
  int ccv = 0;
  REQUIRE(bq_model_num_vars(cc, &ccv) == BQ_OK);
  CHECK(ccv == 6 + 12);
  CHECK(bq_model_build(tt, "bogus", 10, &cc) == BQ_ERROR_PARSE);

  bq_model_free(cc);
  bq_model_free(back);
  bq_model_free(m);
  bq_timetable_free(tt);
}

TEST_CASE("solving through the C surface yields verified optima") {
  bq_timetable* tt = nullptr;
  REQUIRE(bq_timetable_generate(3, 1, 11, &tt) == BQ_OK);
  bq_model* m = nullptr;
  REQUIRE(bq_model_build(tt, "none", 0, &m) == BQ_OK);

  int64_t objectives[3] = {0, 0, 0};
  const char* solvers[3] = {"bf", "bnb", "sa"};
  for (int i = 0; i < 3; ++i) {
    bq_result* r = nullptr;
    REQUIRE(bq_solve(m, solvers[i], 0.0, 123, &r) == BQ_OK);
    REQUIRE(bq_result_objective(r, &objectives[i]) == BQ_OK);
    int64_t breaks = 0, penalty = 0;
    REQUIRE(bq_result_breaks(r, &breaks) == BQ_OK);
    REQUIRE(bq_result_penalty(r, &penalty) == BQ_OK);
    CHECK(breaks + penalty == objectives[i]);
    int cc_count = -1;
    REQUIRE(bq_result_cc_violation_count(r, &cc_count) == BQ_OK);
    CHECK(cc_count == 0);  // unconstrained model reports no levels
    double wall = -1;
    REQUIRE(bq_result_wall_seconds(r, &wall) == BQ_OK);
    CHECK(wall >= 0);
    int optimal = 0;
    REQUIRE(bq_result_optimal(r, &optimal) == BQ_OK);
    if (std::strcmp(solvers[i], "sa") != 0) {
      CHECK(optimal == 1);
      int has = 0;
      int64_t lb = 0;
      REQUIRE(bq_result_lower_bound(r, &lb, &has) == BQ_OK);
      CHECK(has == 1);
      CHECK(lb == objectives[i]);
    }
    StringOut rj;
    REQUIRE(bq_result_to_json(r, &rj.s) == BQ_OK);
    auto parsed = nlohmann::json::parse(rj.str());
    CHECK(parsed.contains("z"));
    CHECK(parsed.contains("objective"));
    CHECK(parsed.contains("optimal"));
    CHECK(parsed.contains("breaks"));
    CHECK(parsed.contains("penalty"));
    CHECK(parsed["objective"].get<int64_t>() == objectives[i]);
    bq_result_free(r);
  }
  CHECK(objectives[0] == objectives[1]);
  CHECK(objectives[2] >= objectives[0]);

  bq_result* r = nullptr;
  CHECK(bq_solve(m, "tabu", 0.0, 1, &r) == BQ_ERROR_INVALID_ARGUMENT);

  bq_model_free(m);
  bq_timetable_free(tt);
}

TEST_CASE("maxcut export, import and node count") {
  bq_timetable* tt = nullptr;
  REQUIRE(bq_timetable_generate(2, 0, 0, &tt) == BQ_OK);
  bq_model* m = nullptr;
  REQUIRE(bq_model_build(tt, "none", 0, &m) == BQ_OK);
  bq_maxcut* mc = nullptr;
  REQUIRE(bq_maxcut_from_model(m, &mc) == BQ_OK);
  int nodes = 0;
  REQUIRE(bq_maxcut_num_nodes(mc, &nodes) == BQ_OK);
  CHECK(nodes == 7);
  StringOut rudy;
  REQUIRE(bq_maxcut_to_rudy(mc, &rudy.s) == BQ_OK);
  bq_maxcut* back = nullptr;
  REQUIRE(bq_maxcut_from_rudy(rudy.s, &back) == BQ_OK);
  StringOut rudy2;
  REQUIRE(bq_maxcut_to_rudy(back, &rudy2.s) == BQ_OK);
  CHECK(rudy.str() == rudy2.str());
  bq_maxcut_free(back);
  bq_maxcut_free(mc);
  bq_model_free(m);
  bq_timetable_free(tt);
}

TEST_CASE("assignment checking reports violations and verdicts") {
  // The worked four-team example: consistent, six breaks, two overlong runs
  // at level 2 and none at level 3.
  const char* tt_json =
      R"({"n": 2, "tau": [[2,3,4,2,3,4],[1,4,3,1,4,3],[4,1,2,4,1,2],[3,2,1,3,2,1]]})";
  const char* y_json =
      R"({"y": [[1,0,1,0,1,0],[0,0,1,1,1,0],[1,1,0,0,0,1],[0,1,0,1,0,1]]})";
  bq_timetable* tt = nullptr;
  REQUIRE(bq_timetable_from_json(tt_json, &tt) == BQ_OK);

  StringOut report;
  int ok = -1;
  REQUIRE(bq_check_assignment(tt, y_json, "none", &report.s, &ok) == BQ_OK);
  auto rep = nlohmann::json::parse(report.str());
  CHECK(ok == 1);
  CHECK(rep["consistent"].get<bool>());
  CHECK(rep["breaks"].get<int>() == 6);

  StringOut report2;
  REQUIRE(bq_check_assignment(tt, y_json, "2", &report2.s, &ok) == BQ_OK);
  auto rep2 = nlohmann::json::parse(report2.str());
  CHECK(ok == 0);
  REQUIRE(rep2["cc"].size() == 1);
  CHECK(rep2["cc"][0]["u"].get<int>() == 2);
  CHECK(rep2["cc"][0]["violations"].size() == 2);

  StringOut report3;
  REQUIRE(bq_check_assignment(tt, y_json, "3", &report3.s, &ok) == BQ_OK);
  CHECK(ok == 1);

  StringOut report4;
  REQUIRE(bq_check_assignment(tt, y_json, "2+3", &report4.s, &ok) == BQ_OK);
  CHECK(ok == 0);

  CHECK(bq_check_assignment(tt, "{oops", "none", &report4.s, &ok) ==
        BQ_ERROR_PARSE);
  CHECK(bq_check_assignment(tt, y_json, "5", &report4.s, &ok) ==
        BQ_ERROR_INVALID_ARGUMENT);

  bq_timetable_free(tt);
}

TEST_CASE("seed derivation is exposed and deterministic") {
  uint64_t s1 = 0, s2 = 0, s3 = 0;
  REQUIRE(bq_derive_seed(42, 1, 2, &s1) == BQ_OK);
  REQUIRE(bq_derive_seed(42, 1, 2, &s2) == BQ_OK);
  REQUIRE(bq_derive_seed(42, 1, 3, &s3) == BQ_OK);
  CHECK(s1 == s2);
  CHECK(s1 != s3);
  CHECK(bq_derive_seed(1, 2, 3, nullptr) == BQ_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("string free tolerates null") {
  bq_string_free(nullptr);  // must be a no-op
}
