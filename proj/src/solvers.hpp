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
#include <span>
#include <string>
#include <vector>

#include "qubo.hpp"

namespace breakqubo {

struct SolveStats {
  uint64_t nodes = 0;       // branch-and-bound tree nodes
  uint64_t iterations = 0;  // enumerated states / annealing steps
  int restarts = 0;
  uint64_t uphill_accepted = 0;
  uint64_t checkpoint_mismatches = 0;  // incremental-vs-full objective drift
  double wall_seconds = 0.0;
};

struct SolveResult {
  bool has_solution = false;
  std::vector<uint8_t> best_z;
  int64_t objective = 0;
  bool proven_optimal = false;
  // Valid global lower bound when known (equals objective once proven);
  // heuristics leave it empty.
  std::optional<int64_t> lower_bound;
  SolveStats stats;
  // Present for models with match structure.
  std::optional<DecodeResult> decoded;
};

/// Exact enumeration. Walks a Gray code with incremental integer deltas; for
/// models with slack variables and intact structure only the match variables
/// are enumerated and each window's slack is minimized analytically. Returns
/// the lexicographically smallest minimizer. Throws TooLargeError when more
/// than 28 variables would have to be enumerated.
SolveResult solve_brute_force(const QuboModel& q);

/// Exact depth-first branch and bound. Tournament models are bounded by the
/// sum of per-team chain minima (dynamic program per team); other models fall
/// back to the coefficient-wise bound. A time limit of 0 means none; on
/// timeout the incumbent is returned unproven together with a valid global
/// lower bound.
SolveResult solve_branch_and_bound(const QuboModel& q, double time_limit_s = 0.0);

struct AnnealParams {
  int restarts = 20;
  uint64_t steps = 0;         // per restart; 0 -> max(20000, 2000 * num_vars)
  double t0 = 0.0;            // 0 -> calibrated from uphill move deltas
  double t_end = 0.05;
  double fixed_temperature = -1.0;  // >= 0 pins the temperature (0 = descent)
  uint64_t checkpoint_every = 10000;
};

/// Single-bit-flip simulated annealing with geometric cooling, restarted
/// annealing-chain by annealing-chain from seeds derived from `seed`. Fully
/// deterministic for a given (model, seed, params). Requires num_vars >= 1.
SolveResult solve_annealing(const QuboModel& q, uint64_t seed,
                            const AnnealParams& params = {});

/// Admissible lower bound from coefficient signs under a partial fixing
/// (fixed[v] in {-1 free, 0, 1}).
int64_t coefficient_lower_bound(const QuboModel& q,
                                std::span<const int8_t> fixed);

/// Independent acceptance check of a solver result against its model:
/// objective re-evaluation, and for tournament models decoded-assignment
/// consistency, break recount and the break/penalty split. On failure `why`
/// (when given) receives the first reason.
bool verify_result(const QuboModel& q, const SolveResult& r,
                   std::string* why = nullptr);

/// Precomputed neighbor lists for O(deg) single-flip objective deltas.
struct Adjacency {
  std::vector<int64_t> linear;
  std::vector<std::vector<std::pair<int, int64_t>>> nbr;

  static Adjacency build(const QuboModel& q);

  int64_t flip_delta(std::span<const uint8_t> z, int v) const {
    int64_t s = linear[v];
    for (const auto& [j, c] : nbr[v]) s += c * z[j];
    return (1 - 2 * static_cast<int64_t>(z[v])) * s;
  }
};

}  // namespace breakqubo
