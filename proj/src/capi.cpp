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

#include "breakqubo.h"

#include <cstring>
#include <new>
#include <string>

#include "assignment.hpp"
#include "errors.hpp"
#include "json.hpp"
#include "maxcut.hpp"
#include "qubo.hpp"
#include "rng.hpp"
#include "solvers.hpp"
#include "tournament.hpp"

using namespace breakqubo;

struct bq_timetable {
  Timetable tt;
};
struct bq_model {
  QuboModel q;
};
struct bq_maxcut {
  MaxCutInstance mc;
};
struct bq_result {
  SolveResult r;
};

namespace {

thread_local std::string g_last_error = "";

bq_status fail(bq_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
bq_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return fail(BQ_ERROR_PARSE, e.what());
  } catch (const IoError& e) {
    return fail(BQ_ERROR_IO, e.what());
  } catch (const TooLargeError& e) {
    return fail(BQ_ERROR_TOO_LARGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(BQ_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BQ_ERROR_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(BQ_ERROR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bq_status require(bool ok, const char* what) {
  return ok ? BQ_OK : fail(BQ_ERROR_INVALID_ARGUMENT, what);
}

nlohmann::json violations_json(const std::vector<CcViolation>& vs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CcViolation& v : vs) {
    arr.push_back({{"team", v.team},
                   {"start_slot", v.start_slot},
                   {"run_length", v.run_length}});
  }
  return arr;
}

}  // namespace

extern "C" {

const char* bq_last_error(void) { return g_last_error.c_str(); }

void bq_string_free(char* s) { delete[] s; }

bq_status bq_derive_seed(uint64_t master, uint64_t a, uint64_t b, uint64_t* out) {
  if (bq_status st = require(out != nullptr, "out is NULL"); st != BQ_OK) return st;
  *out = derive_seed(master, a, b);
  return BQ_OK;
}

bq_status bq_timetable_generate(int n, int has_seed, uint64_t seed,
                                bq_timetable** out) {
  if (bq_status st = require(out != nullptr, "out is NULL"); st != BQ_OK) return st;
  return guarded([&] {
    std::optional<uint64_t> s;
    if (has_seed) s = seed;
    *out = new bq_timetable{generate_mdrrt(n, s)};
    return BQ_OK;
  });
}

bq_status bq_timetable_from_json(const char* text, bq_timetable** out) {
  if (bq_status st = require(text && out, "text/out is NULL"); st != BQ_OK) return st;
  return guarded([&] {
    *out = new bq_timetable{timetable_from_json(text)};
    return BQ_OK;
  });
}

bq_status bq_timetable_to_json(const bq_timetable* tt, char** out) {
  if (bq_status st = require(tt && out, "tt/out is NULL"); st != BQ_OK) return st;
  return guarded([&] {
    *out = dup_string(timetable_to_json(tt->tt));
    return BQ_OK;
  });
}

bq_status bq_timetable_validate(const bq_timetable* tt, char** report_json) {
  if (bq_status st = require(tt && report_json, "tt/report is NULL"); st != BQ_OK)
    return st;
  return guarded([&] {
    nlohmann::json arr = nlohmann::json::array();
    for (const TimetableViolation& v : validate_timetable(tt->tt)) {
      arr.push_back(to_string(v));
    }
    *report_json = dup_string(arr.dump());
    return BQ_OK;
  });
}

bq_status bq_timetable_n(const bq_timetable* tt, int* out) {
  if (bq_status st = require(tt && out, "tt/out is NULL"); st != BQ_OK) return st;
  *out = tt->tt.n;
  return BQ_OK;
}

void bq_timetable_free(bq_timetable* tt) { delete tt; }

bq_status bq_model_build(const bq_timetable* tt, const char* cc_mode,
                         int64_t penalty, bq_model** out) {
  if (bq_status st = require(tt && cc_mode && out, "tt/cc_mode/out is NULL");
      st != BQ_OK)
    return st;
  return guarded([&] {
    const CcMode mode = cc_mode_from_string(cc_mode);
    const MeetingSet ms = extract_meetings(tt->tt);
    *out = new bq_model{build_model(ms, mode, penalty)};
    return BQ_OK;
  });
}

bq_status bq_model_from_text(const char* text, const char* meta_json,
                             bq_model** out) {
  if (bq_status st = require(text && out, "text/out is NULL"); st != BQ_OK)
    return st;
  return guarded([&] {
    *out = new bq_model{
        qubo_from_text(text, meta_json ? std::string(meta_json) : std::string())};
    return BQ_OK;
  });
}

bq_status bq_model_to_text(const bq_model* m, char** out) {
  if (bq_status st = require(m && out, "model/out is NULL"); st != BQ_OK) return st;
  return guarded([&] {
    *out = dup_string(qubo_to_text(m->q));
    return BQ_OK;
  });
}

bq_status bq_model_meta_json(const bq_model* m, char** out) {
  if (bq_status st = require(m && out, "model/out is NULL"); st != BQ_OK) return st;
  return guarded([&] {
    *out = dup_string(qubo_meta_to_json(m->q));
    return BQ_OK;
  });
}

bq_status bq_model_num_vars(const bq_model* m, int* out) {
  if (bq_status st = require(m && out, "model/out is NULL"); st != BQ_OK) return st;
  *out = m->q.num_vars();
  return BQ_OK;
}

bq_status bq_model_objective(const bq_model* m, const uint8_t* z, int len,
                             int64_t* out) {
  if (bq_status st = require(m && z && out, "model/z/out is NULL"); st != BQ_OK)
    return st;
  return guarded([&] {
    *out = m->q.objective(std::span<const uint8_t>(z, static_cast<size_t>(len)));
    return BQ_OK;
  });
}

void bq_model_free(bq_model* m) { delete m; }

bq_status bq_maxcut_from_model(const bq_model* m, bq_maxcut** out) {
  if (bq_status st = require(m && out, "model/out is NULL"); st != BQ_OK) return st;
  return guarded([&] {
    *out = new bq_maxcut{qubo_to_maxcut(m->q)};
    return BQ_OK;
  });
}

bq_status bq_maxcut_to_rudy(const bq_maxcut* mc, char** out) {
  if (bq_status st = require(mc && out, "maxcut/out is NULL"); st != BQ_OK)
    return st;
  return guarded([&] {
    *out = dup_string(maxcut_to_rudy(mc->mc));
    return BQ_OK;
  });
}

bq_status bq_maxcut_from_rudy(const char* text, bq_maxcut** out) {
  if (bq_status st = require(text && out, "text/out is NULL"); st != BQ_OK)
    return st;
  return guarded([&] {
    *out = new bq_maxcut{maxcut_from_rudy(text)};
    return BQ_OK;
  });
}

bq_status bq_maxcut_num_nodes(const bq_maxcut* mc, int* out) {
  if (bq_status st = require(mc && out, "maxcut/out is NULL"); st != BQ_OK)
    return st;
  *out = mc->mc.num_nodes;
  return BQ_OK;
}

void bq_maxcut_free(bq_maxcut* mc) { delete mc; }

bq_status bq_solve(const bq_model* m, const char* solver, double time_limit_s,
                   uint64_t seed, bq_result** out) {
  if (bq_status st = require(m && solver && out, "model/solver/out is NULL");
      st != BQ_OK)
    return st;
  return guarded([&]() -> bq_status {
    SolveResult r;
    const std::string name = solver;
    if (name == "bf") {
      r = solve_brute_force(m->q);
    } else if (name == "bnb") {
      r = solve_branch_and_bound(m->q, time_limit_s);
    } else if (name == "sa") {
      r = solve_annealing(m->q, seed);
    } else {
      return fail(BQ_ERROR_INVALID_ARGUMENT,
                  "unknown solver '" + name + "' (expected bf, bnb or sa)");
    }
    std::string why;
    if (!verify_result(m->q, r, &why)) {
      return fail(BQ_ERROR_INTERNAL, "result failed verification: " + why);
    }
    *out = new bq_result{std::move(r)};
    return BQ_OK;
  });
}

bq_status bq_result_to_json(const bq_result* r, char** out) {
  if (bq_status st = require(r && out, "result/out is NULL"); st != BQ_OK)
    return st;
  return guarded([&]() -> bq_status {
    if (!r->r.decoded) {
      return fail(BQ_ERROR_INVALID_ARGUMENT,
                  "result has no decoding (generic model)");
    }
    nlohmann::json j;
    j["z"] = r->r.best_z;
    j["objective"] = r->r.objective;
    j["optimal"] = r->r.proven_optimal;
    j["breaks"] = r->r.decoded->breaks;
    j["penalty"] = r->r.decoded->penalty_value;
    nlohmann::json cc = nlohmann::json::array();
    for (const auto& [u, vs] : r->r.decoded->cc) {
      for (const CcViolation& v : vs) {
        nlohmann::json item = {{"team", v.team},
                               {"start_slot", v.start_slot},
                               {"run_length", v.run_length}};
        item["u"] = u;
        cc.push_back(std::move(item));
      }
    }
    j["cc_violations"] = std::move(cc);
    *out = dup_string(j.dump());
    return BQ_OK;
  });
}

bq_status bq_result_objective(const bq_result* r, int64_t* out) {
  if (bq_status st = require(r && out, "result/out is NULL"); st != BQ_OK)
    return st;
  *out = r->r.objective;
  return BQ_OK;
}

bq_status bq_result_optimal(const bq_result* r, int* out) {
  if (bq_status st = require(r && out, "result/out is NULL"); st != BQ_OK)
    return st;
  *out = r->r.proven_optimal ? 1 : 0;
  return BQ_OK;
}

bq_status bq_result_breaks(const bq_result* r, int64_t* out) {
  if (bq_status st = require(r && out, "result/out is NULL"); st != BQ_OK)
    return st;
  if (!r->r.decoded) {
    return fail(BQ_ERROR_INVALID_ARGUMENT, "result has no decoding");
  }
  *out = r->r.decoded->breaks;
  return BQ_OK;
}

bq_status bq_result_penalty(const bq_result* r, int64_t* out) {
  if (bq_status st = require(r && out, "result/out is NULL"); st != BQ_OK)
    return st;
  if (!r->r.decoded) {
    return fail(BQ_ERROR_INVALID_ARGUMENT, "result has no decoding");
  }
  *out = r->r.decoded->penalty_value;
  return BQ_OK;
}

bq_status bq_result_cc_violation_count(const bq_result* r, int* out) {
  if (bq_status st = require(r && out, "result/out is NULL"); st != BQ_OK)
    return st;
  if (!r->r.decoded) {
    return fail(BQ_ERROR_INVALID_ARGUMENT, "result has no decoding");
  }
  int count = 0;
  for (const auto& [u, vs] : r->r.decoded->cc) {
    count += static_cast<int>(vs.size());
  }
  *out = count;
  return BQ_OK;
}

bq_status bq_result_wall_seconds(const bq_result* r, double* out) {
  if (bq_status st = require(r && out, "result/out is NULL"); st != BQ_OK)
    return st;
  *out = r->r.stats.wall_seconds;
  return BQ_OK;
}

bq_status bq_result_lower_bound(const bq_result* r, int64_t* out, int* has) {
  if (bq_status st = require(r && out && has, "result/out/has is NULL");
      st != BQ_OK)
    return st;
  *has = r->r.lower_bound.has_value() ? 1 : 0;
  *out = r->r.lower_bound.value_or(0);
  return BQ_OK;
}

void bq_result_free(bq_result* r) { delete r; }

bq_status bq_check_assignment(const bq_timetable* tt, const char* assignment_json,
                              const char* cc_levels, char** report_json,
                              int* ok) {
  if (bq_status st = require(tt && assignment_json && cc_levels && report_json,
                             "tt/assignment/cc_levels/report is NULL");
      st != BQ_OK)
    return st;
  return guarded([&]() -> bq_status {
    const HAAssignment ha = assignment_from_json(assignment_json);
    const MeetingSet ms = extract_meetings(tt->tt);
    std::vector<int> levels;
    const std::string lv = cc_levels;
    if (lv == "none") {
    } else if (lv == "2") {
      levels = {2};
    } else if (lv == "3") {
      levels = {3};
    } else if (lv == "2+3") {
      levels = {2, 3};
    } else {
      return fail(BQ_ERROR_INVALID_ARGUMENT,
                  "cc_levels must be none, 2, 3 or 2+3");
    }
    const FeasibilityReport rep = analyze_assignment(ha, ms, levels);
    nlohmann::json j;
    j["consistent"] = rep.consistent;
    j["breaks"] = rep.breaks;
    nlohmann::json cc = nlohmann::json::array();
    bool clean = rep.consistent;
    for (const auto& [u, vs] : rep.cc) {
      cc.push_back({{"u", u}, {"violations", violations_json(vs)}});
      if (!vs.empty()) clean = false;
    }
    j["cc"] = std::move(cc);
    *report_json = dup_string(j.dump());
    if (ok) *ok = clean ? 1 : 0;
    return BQ_OK;
  });
}

}  // extern "C"
