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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "rng.hpp"
#include "solvers.hpp"

namespace breakqubo {

namespace {

struct ChainOutcome {
  std::vector<uint8_t> z;
  int64_t obj = 0;
  uint64_t uphill = 0;
  uint64_t mismatches = 0;
};

// One annealing chain: random start, single-bit flips with Metropolis
// acceptance and geometric cooling (or a pinned temperature). The running
// objective is maintained by integer deltas and re-derived from scratch at
// checkpoints; any disagreement is counted, not hidden.
ChainOutcome run_chain(const QuboModel& q, const Adjacency& adj, uint64_t seed,
                       uint64_t steps, double t0, double t_end, double fixed_t,
                       uint64_t checkpoint_every) {
  const int nv = q.num_vars();
  SplitMix64 rng(seed);
  std::vector<uint8_t> z(nv);
  for (auto& b : z) b = static_cast<uint8_t>(rng.next() & 1);
  int64_t cur = q.objective(z);
  ChainOutcome out{z, cur, 0, 0};
  double temp = fixed_t >= 0 ? fixed_t : t0;
  double alpha = 1.0;
  if (fixed_t < 0 && steps > 1) {
    alpha = std::pow(t_end / t0, 1.0 / static_cast<double>(steps - 1));
  }
  for (uint64_t k = 0; k < steps; ++k) {
    const int v = static_cast<int>(rng.below(nv));
    const int64_t d = adj.flip_delta(z, v);
    bool accept = d <= 0;
    if (!accept && temp > 0) {
      accept = rng.uniform() < std::exp(-static_cast<double>(d) / temp);
    }
    if (accept) {
      z[v] ^= 1;
      cur += d;
      out.uphill += d > 0;
      if (cur < out.obj) {
        out.obj = cur;
        out.z = z;
      }
    }
    if (checkpoint_every != 0 && (k + 1) % checkpoint_every == 0) {
      const int64_t full = q.objective(z);
      if (full != cur) {
        ++out.mismatches;
        cur = full;
      }
    }
    if (fixed_t < 0) temp *= alpha;
  }
  return out;
}

// Start temperature from an accept-everything warmup walk: the mean uphill
// delta is mapped to an initial acceptance probability of 0.8.
double calibrate_t0(const QuboModel& q, const Adjacency& adj, uint64_t seed) {
  const int nv = q.num_vars();
  SplitMix64 rng(seed);
  std::vector<uint8_t> z(nv);
  for (auto& b : z) b = static_cast<uint8_t>(rng.next() & 1);
  int64_t pos_sum = 0;
  uint64_t pos_cnt = 0;
  const uint64_t samples =
      std::clamp<uint64_t>(4 * static_cast<uint64_t>(nv), 64, 4096);
  for (uint64_t k = 0; k < samples; ++k) {
    const int v = static_cast<int>(rng.below(nv));
    const int64_t d = adj.flip_delta(z, v);
    if (d > 0) {
      pos_sum += d;
      ++pos_cnt;
    }
    z[v] ^= 1;
  }
  if (pos_cnt == 0) return 1.0;
  const double mean = static_cast<double>(pos_sum) / static_cast<double>(pos_cnt);
  return mean / std::log(1.0 / 0.8);
}

}  // namespace

SolveResult solve_annealing(const QuboModel& q, uint64_t seed,
                            const AnnealParams& params) {
  if (q.num_vars() < 1) {
    throw std::invalid_argument("solve_annealing: model has no variables");
  }
  if (params.restarts < 1) {
    throw std::invalid_argument("solve_annealing: restarts must be >= 1");
  }
  if (params.t_end <= 0 || params.t0 < 0) {
    throw std::invalid_argument("solve_annealing: temperatures must be positive");
  }
  const auto start = std::chrono::steady_clock::now();
  const Adjacency adj = Adjacency::build(q);
  const uint64_t steps =
      params.steps != 0
          ? params.steps
          : std::max<uint64_t>(20000, 2000 * static_cast<uint64_t>(q.num_vars()));
  double t0 = params.t0;
  if (params.fixed_temperature < 0 && t0 == 0) {
    t0 = calibrate_t0(q, adj, derive_seed(seed, 0));
  }
  t0 = std::max(t0, params.t_end);

  SolveResult res;
  for (int r = 0; r < params.restarts; ++r) {
    ChainOutcome out =
        run_chain(q, adj, derive_seed(seed, 1, static_cast<uint64_t>(r)), steps,
                  t0, params.t_end, params.fixed_temperature,
                  params.checkpoint_every);
    res.stats.iterations += steps;
    res.stats.uphill_accepted += out.uphill;
    res.stats.checkpoint_mismatches += out.mismatches;
    if (!res.has_solution || out.obj < res.objective ||
        (out.obj == res.objective &&
         std::lexicographical_compare(out.z.begin(), out.z.end(),
                                      res.best_z.begin(), res.best_z.end()))) {
      res.has_solution = true;
      res.objective = out.obj;
      res.best_z = std::move(out.z);
    }
  }
  res.stats.restarts = params.restarts;
  res.proven_optimal = false;
  res.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (q.has_meta() && q.n() > 0) res.decoded = decode(q, res.best_z);
  return res;
}

}  // namespace breakqubo
