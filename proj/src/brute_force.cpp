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
#include <bit>
#include <chrono>
#include <limits>

#include "errors.hpp"
#include "solvers.hpp"
#include "structure.hpp"

namespace breakqubo {

namespace {

constexpr int kMaxEnumeratedVars = 28;

void finish(SolveResult& res, const QuboModel& q,
            std::chrono::steady_clock::time_point start) {
  res.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (q.has_meta() && q.n() > 0) res.decoded = decode(q, res.best_z);
}

// Enumerates only the match variables, in plain counting order with z_1 as
// the most significant bit (so the scan is lexicographic and the first strict
// improvement is the lexicographically smallest optimum). Slack variables are
// minimized analytically inside the per-team shares.
SolveResult structured(const QuboModel& q, const ModelStructure& st,
                       std::chrono::steady_clock::time_point start) {
  const int m = st.num_match_vars();
  if (m > kMaxEnumeratedVars) {
    throw TooLargeError("brute force enumerates at most " +
                        std::to_string(kMaxEnumeratedVars) +
                        " variables; this model needs " + std::to_string(m));
  }
  std::vector<int8_t> fixed(st.num_vars(), -1);
  int64_t best = std::numeric_limits<int64_t>::max();
  std::vector<int8_t> best_match(m, 0);
  SolveResult res;
  const uint64_t total = 1ull << m;
  for (uint64_t k = 0; k < total; ++k) {
    for (int i = 0; i < m; ++i) {
      fixed[i] = static_cast<int8_t>((k >> (m - 1 - i)) & 1);
    }
    int64_t v = 0;
    for (int t = 1; t <= st.teams(); ++t) v += st.team_min(t, fixed);
    if (v < best) {
      best = v;
      std::copy(fixed.begin(), fixed.begin() + m, best_match.begin());
    }
  }
  res.stats.iterations = total;

  std::vector<uint8_t> z(st.num_vars(), 0);
  for (int i = 0; i < m; ++i) z[i] = static_cast<uint8_t>(best_match[i]);
  st.complete_slacks(z);
  res.has_solution = true;
  res.best_z = std::move(z);
  res.objective = best;
  res.proven_optimal = true;
  res.lower_bound = best;
  finish(res, q, start);
  return res;
}

}  // namespace

SolveResult solve_brute_force(const QuboModel& q) {
  const auto start = std::chrono::steady_clock::now();
  const int nv = q.num_vars();
  SolveResult res;
  if (nv == 0) {
    res.has_solution = true;
    res.objective = q.offset();
    res.proven_optimal = true;
    res.lower_bound = res.objective;
    res.stats.iterations = 1;
    res.stats.wall_seconds = 0.0;
    return res;
  }

  // Models with slack variables: enumerate match bits only, if the structure
  // is intact.
  if (q.num_slack_vars() > 0) {
    if (auto st = ModelStructure::recover(q)) return structured(q, *st, start);
  }

  if (nv > kMaxEnumeratedVars) {
    throw TooLargeError("brute force enumerates at most " +
                        std::to_string(kMaxEnumeratedVars) +
                        " variables; this model has " + std::to_string(nv));
  }

  const Adjacency adj = Adjacency::build(q);
  std::vector<uint8_t> z(nv, 0);
  int64_t cur = q.objective(z);
  int64_t best = cur;
  std::vector<uint8_t> best_z = z;
  const uint64_t total = 1ull << nv;
  for (uint64_t k = 1; k < total; ++k) {
    // Gray code: state k differs from k-1 in bit ctz(k) only.
    const int v = std::countr_zero(k);
    cur += adj.flip_delta(z, v);
    z[v] ^= 1;
    if (cur < best ||
        (cur == best && std::lexicographical_compare(z.begin(), z.end(),
                                                     best_z.begin(),
                                                     best_z.end()))) {
      best = cur;
      best_z = z;
    }
  }
  res.stats.iterations = total;
  res.has_solution = true;
  res.best_z = std::move(best_z);
  res.objective = best;
  res.proven_optimal = true;
  res.lower_bound = best;
  finish(res, q, start);
  return res;
}

}  // namespace breakqubo
