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

#include "assignment.hpp"
#include "solvers.hpp"

namespace breakqubo {

Adjacency Adjacency::build(const QuboModel& q) {
  Adjacency adj;
  adj.linear.assign(q.num_vars(), 0);
  adj.nbr.assign(q.num_vars(), {});
  for (const auto& [key, c] : q.terms()) {
    const auto [i, j] = key;
    if (i == j) {
      adj.linear[i] += c;
    } else {
      adj.nbr[i].emplace_back(j, c);
      adj.nbr[j].emplace_back(i, c);
    }
  }
  return adj;
}

int64_t coefficient_lower_bound(const QuboModel& q,
                                std::span<const int8_t> fixed) {
  if (static_cast<int>(fixed.size()) != q.num_vars()) {
    throw std::invalid_argument("coefficient_lower_bound: fixing length mismatch");
  }
  int64_t val = q.offset();
  int64_t pair_min = 0;
  std::vector<int64_t> eff(q.num_vars(), 0);  // effective linear of free vars
  for (const auto& [key, c] : q.terms()) {
    const auto [i, j] = key;
    if (i == j) {
      if (fixed[i] >= 0) {
        val += c * fixed[i];
      } else {
        eff[i] += c;
      }
    } else if (fixed[i] >= 0 && fixed[j] >= 0) {
      val += c * fixed[i] * fixed[j];
    } else if (fixed[i] >= 0) {
      if (fixed[i]) eff[j] += c;
    } else if (fixed[j] >= 0) {
      if (fixed[j]) eff[i] += c;
    } else {
      pair_min += std::min<int64_t>(c, 0);
    }
  }
  for (int i = 0; i < q.num_vars(); ++i) {
    if (fixed[i] < 0) val += std::min<int64_t>(eff[i], 0);
  }
  return val + pair_min;
}

bool verify_result(const QuboModel& q, const SolveResult& r, std::string* why) {
  auto fail = [&](const char* m) {
    if (why) *why = m;
    return false;
  };
  if (!r.has_solution) return fail("result carries no solution");
  if (static_cast<int>(r.best_z.size()) != q.num_vars()) {
    return fail("bit vector length does not match the model");
  }
  if (q.objective(r.best_z) != r.objective) {
    return fail("objective disagrees with re-evaluation");
  }
  if (r.lower_bound && *r.lower_bound > r.objective) {
    return fail("lower bound exceeds the reported objective");
  }
  if (r.proven_optimal && (!r.lower_bound || *r.lower_bound != r.objective)) {
    return fail("claimed optimal without a matching bound");
  }
  if (!q.has_meta() || q.n() == 0) return true;

  MeetingSet ms;
  try {
    ms = meeting_set_from_meta(q);
  } catch (const std::exception&) {
    return fail("model metadata does not describe a meeting set");
  }
  if (!r.decoded) return fail("tournament model solved without a decoding");
  const DecodeResult& d = *r.decoded;
  if (!check_consistency(d.assignment, ms)) {
    return fail("decoded assignment is inconsistent with the meetings");
  }
  if (count_breaks(d.assignment) != d.breaks) {
    return fail("break count disagrees with a direct recount");
  }
  if (d.breaks + d.penalty_value != r.objective) {
    return fail("breaks plus penalty do not add up to the objective");
  }
  if (d.penalty_value < 0) return fail("negative penalty part");
  for (const auto& [u, violations] : d.cc) {
    if (check_cc(d.assignment, u) != violations) {
      return fail("consecutive-constraint scan disagrees");
    }
    if (d.penalty_value == 0 && !violations.empty()) {
      return fail("zero penalty but constraint violations present");
    }
  }
  return true;
}

}  // namespace breakqubo
