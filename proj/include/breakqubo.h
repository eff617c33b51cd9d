/* Copyright 2026 The breakqubo authors
 *
 *    Licensed under the Apache License, Version 2.0 (the "License");
 *    you may not use this file except in compliance with the License.
 *    You may obtain a copy of the License at
 *
 *        http://www.apache.org/licenses/LICENSE-2.0
 *
 *    Unless required by applicable law or agreed to in writing, software
 *    distributed under the License is distributed on an "AS IS" BASIS,
 *    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *    See the License for the specific language governing permissions and
 *    limitations under the License.
 */

/* C interface of libbreakqubo.
 *
 * Every function returns a bq_status; outputs travel through out-parameters.
 * On any failure bq_last_error() describes the problem (thread-local).
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with bq_string_free(); handles with their matching *_free().
 * All text formats (timetable JSON, home/away JSON, QUBO text plus metadata
 * sidecar, rudy max-cut, solution JSON) are byte-deterministic for identical
 * inputs and seeds.
 */

#ifndef BREAKQUBO_H_
#define BREAKQUBO_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bq_status {
  BQ_OK = 0,
  BQ_ERROR_INVALID_ARGUMENT = 1,
  BQ_ERROR_PARSE = 2,
  BQ_ERROR_IO = 3,
  BQ_ERROR_TOO_LARGE = 4,  /* exceeds a hard solver guard */
  BQ_ERROR_NO_MEMORY = 5,
  BQ_ERROR_INTERNAL = 6    /* includes failed self-verification of a result */
} bq_status;

typedef struct bq_timetable bq_timetable;
typedef struct bq_model bq_model;
typedef struct bq_maxcut bq_maxcut;
typedef struct bq_result bq_result;

/* Message for the most recent failure on this thread; never NULL. */
const char* bq_last_error(void);

void bq_string_free(char* s);

/* Deterministic seed derivation so one master seed can drive any number of
 * independent streams (instance index, restart index, ...). */
bq_status bq_derive_seed(uint64_t master, uint64_t a, uint64_t b, uint64_t* out);

/* ---- timetables ---------------------------------------------------- */

/* Mirrored double round robin over 2n teams. With has_seed = 0 the canonical
 * circle-method slot order is kept; otherwise the first-half slots are
 * shuffled by the seed. */
bq_status bq_timetable_generate(int n, int has_seed, uint64_t seed,
                                bq_timetable** out);
bq_status bq_timetable_from_json(const char* text, bq_timetable** out);
bq_status bq_timetable_to_json(const bq_timetable* tt, char** out);
/* JSON array of violated invariants; "[]" for a valid table. */
bq_status bq_timetable_validate(const bq_timetable* tt, char** report_json);
bq_status bq_timetable_n(const bq_timetable* tt, int* out);
void bq_timetable_free(bq_timetable* tt);

/* ---- models --------------------------------------------------------- */

/* cc_mode is one of "none", "cc2", "cc3", "cc2+cc3"; penalty is ignored for
 * "none" and must be >= 1 otherwise. */
bq_status bq_model_build(const bq_timetable* tt, const char* cc_mode,
                         int64_t penalty, bq_model** out);
/* meta_json may be NULL or empty for a generic (undecodable) model. */
bq_status bq_model_from_text(const char* text, const char* meta_json,
                             bq_model** out);
bq_status bq_model_to_text(const bq_model* m, char** out);
bq_status bq_model_meta_json(const bq_model* m, char** out);
bq_status bq_model_num_vars(const bq_model* m, int* out);
bq_status bq_model_objective(const bq_model* m, const uint8_t* z, int len,
                             int64_t* out);
void bq_model_free(bq_model* m);

/* ---- max-cut reduction ---------------------------------------------- */

bq_status bq_maxcut_from_model(const bq_model* m, bq_maxcut** out);
bq_status bq_maxcut_to_rudy(const bq_maxcut* mc, char** out);
bq_status bq_maxcut_from_rudy(const char* text, bq_maxcut** out);
bq_status bq_maxcut_num_nodes(const bq_maxcut* mc, int* out);
void bq_maxcut_free(bq_maxcut* mc);

/* ---- solving --------------------------------------------------------- */

/* solver is "bf" (exact enumeration), "bnb" (exact branch and bound; honors
 * time_limit_s > 0) or "sa" (simulated annealing; uses seed). The result is
 * re-checked against the model by an independent verifier before it is
 * returned. */
bq_status bq_solve(const bq_model* m, const char* solver, double time_limit_s,
                   uint64_t seed, bq_result** out);

/* {"z": [...], "objective": int, "optimal": bool, "breaks": int,
 *  "penalty": int, "cc_violations": [...]}; no volatile fields, so identical
 * runs produce identical bytes. */
bq_status bq_result_to_json(const bq_result* r, char** out);
bq_status bq_result_objective(const bq_result* r, int64_t* out);
bq_status bq_result_optimal(const bq_result* r, int* out);
bq_status bq_result_breaks(const bq_result* r, int64_t* out);
/* Penalty part of the objective (objective - breaks). */
bq_status bq_result_penalty(const bq_result* r, int64_t* out);
bq_status bq_result_cc_violation_count(const bq_result* r, int* out);
bq_status bq_result_wall_seconds(const bq_result* r, double* out);
/* has is set to 0 when no global bound is known (heuristic results). */
bq_status bq_result_lower_bound(const bq_result* r, int64_t* out, int* has);
void bq_result_free(bq_result* r);

/* ---- assignment checking --------------------------------------------- */

/* cc_levels: "none", "2", "3" or "2+3". Report JSON:
 *   {"consistent": bool, "breaks": int,
 *    "cc": [{"u": int, "violations": [{"team","start_slot","run_length"}]}]}
 * ok is set to 1 iff consistent and free of violations. */
bq_status bq_check_assignment(const bq_timetable* tt, const char* assignment_json,
                              const char* cc_levels, char** report_json, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* BREAKQUBO_H_ */
