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
#include <array>
#include <bit>
#include <chrono>
#include <limits>
#include <utility>
#include <vector>

#include "solvers.hpp"
#include "structure.hpp"

namespace breakqubo {

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

using Clock = std::chrono::steady_clock;

// One first-half cell pinned by a match variable (each match variable pins
// exactly one cell in each of its two teams' chains).
struct VarCell {
  int team_ix = 0;  // 0-based
  int pos = 0;      // 1..2n-1
  bool negated = false;
};

// Incremental per-team view of the current fixing. A fixed cell (p, y) is
// compatible with exactly one perfectly alternating pattern, its "phase"
// (p + y) mod 2; votes[] counts fixed cells per phase. A team can still
// reach a zero-break chain iff all its fixed cells vote for one phase.
struct TeamState {
  uint32_t fixmask = 0;          // bit p-1 set when cell p is fixed
  uint32_t yval = 0;             // fixed y values, same bit layout
  uint16_t votes[2] = {0, 0};    // fixed cells per alternating phase
  int64_t m = 0;                 // exact share minimum under the fixing
};

struct Frame {
  int nsaved = 0;
  std::array<std::pair<int, TeamState>, 2> saved{};  // (team_ix, old state)
  int64_t saved_bound = 0;                           // generic fallback
};

class Bnb {
 public:
  Bnb(const QuboModel& q, double time_limit_s)
      : q_(q),
        st_(ModelStructure::recover(q)),
        fixed_(q.num_vars(), -1),
        has_deadline_(time_limit_s > 0),
        deadline_(Clock::now() +
                  std::chrono::duration_cast<Clock::duration>(
                      std::chrono::duration<double>(
                          time_limit_s > 0 ? time_limit_s : 0))) {
    const int branch_vars = st_ ? st_->num_match_vars() : q.num_vars();
    order_.resize(branch_vars);
    for (int i = 0; i < branch_vars; ++i) order_[i] = i;
    if (st_) {
      L_ = st_->positions();
      var_cells_.resize(branch_vars);
      for (int t = 1; t <= st_->teams(); ++t) {
        for (int p = 1; p <= L_; ++p) {
          const CellRef& c = st_->cell(t, p);
          var_cells_[c.var][t == st_->teams_of_var(c.var)[0] ? 0 : 1] = {
              t - 1, p, c.negated};
        }
      }
      team_.assign(st_->teams(), TeamState{});
      for (const TeamState& ts : team_) account(ts, +1);
    } else {
      raw_bound_ = coefficient_lower_bound(q_, fixed_);
    }
  }

  SolveResult run() {
    const auto start = Clock::now();
    seed_incumbent();
    symmetric_ = is_complement_invariant(q_);
    dfs(0);
    SolveResult res;
    res.has_solution = true;
    res.best_z = best_z_;
    res.objective = best_obj_;
    res.proven_optimal = !timed_out_;
    res.lower_bound =
        timed_out_ ? std::min(best_obj_, open_min_) : best_obj_;
    res.stats.nodes = nodes_;
    res.stats.wall_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (q_.has_meta() && q_.n() > 0) res.decoded = decode(q_, res.best_z);
    return res;
  }

 private:
  void consider(const std::vector<uint8_t>& z) {
    const int64_t obj = q_.objective(z);
    if (obj < best_obj_) {
      best_obj_ = obj;
      best_z_ = z;
    }
  }

  void seed_incumbent() {
    std::vector<uint8_t> z(q_.num_vars(), 0);
    if (st_) st_->complete_slacks(z);
    best_obj_ = q_.objective(z);
    best_z_ = z;
    if (q_.num_vars() >= 1) {
      AnnealParams p;
      p.restarts = 4;
      p.steps = std::max<uint64_t>(20000, 1000 * q_.num_vars());
      SolveResult warm = solve_annealing(q_, 0x715DA1F7C0F5ED4Dull, p);
      consider(warm.best_z);
      if (st_ && st_->has_cc3()) {
        std::vector<uint8_t> improved = warm.best_z;
        st_->complete_slacks(improved);
        consider(improved);
      }
    }
  }

  bool timed_out() {
    if (timed_out_) return true;
    if (!has_deadline_) return false;
    if ((++tick_ & 255u) == 0 && Clock::now() >= deadline_) timed_out_ = true;
    return timed_out_;
  }

  // Adds (sgn=+1) or removes (sgn=-1) one team's contribution to the
  // aggregated bound state.
  void account(const TeamState& ts, int sgn) {
    if (ts.m == 0) {
      z0_ += sgn;
      if (ts.votes[1] == 0) a0_ += sgn;
      if (ts.votes[0] == 0) a1_ += sgn;
    }
    raw_bound_ += sgn * ts.m;
    // A chain that cannot reach zero breaks pays at least 3: one equal
    // adjacent pair costs 2 and forces the half-boundary mismatch (the
    // chain length is odd), and penalties only add to that.
    lifted_bound_ += sgn * (ts.m == 0 ? 0 : std::max<int64_t>(ts.m, 3));
  }

  // Exact minimum of an unconstrained team's share given its fixed cells:
  // free stretches between consecutive fixed cells are independent, each
  // costs 2 iff its endpoint values clash with the stretch parity, and the
  // wrap-around stretch crosses the half boundary (a mismatch there costs 1).
  int64_t chain_min(const TeamState& ts) const {
    const uint32_t mask = ts.fixmask;
    if ((mask & (mask - 1)) == 0) return 0;
    const int first = std::countr_zero(mask) + 1;
    const int yfirst = (ts.yval >> (first - 1)) & 1;
    int prev = first;
    int yprev = yfirst;
    int64_t cost = 0;
    uint32_t rest = mask & (mask - 1);
    while (rest != 0) {
      const int p = std::countr_zero(rest) + 1;
      rest &= rest - 1;
      const int y = (ts.yval >> (p - 1)) & 1;
      cost += 2 * (((p - prev) & 1) != (y ^ yprev));
      prev = p;
      yprev = y;
    }
    const int d = L_ - prev + first;  // steps through the half boundary
    cost += ((d - 1) & 1) != (yprev ^ yfirst);
    return cost;
  }

  int64_t team_min(int team_ix) const {
    if (!st_->has_cc2() && !st_->has_cc3()) return chain_min(team_[team_ix]);
    return st_->team_min(team_ix + 1, fixed_);
  }

  // Lower bound for the current subtree. Beyond the per-team minima, at
  // most one team per alternating phase can actually land on a zero-break
  // chain (two teams with the same phase would share a home/away pattern,
  // yet they meet); every other zero-minimum team pays at least 3.
  int64_t bound() const {
    if (!st_) return raw_bound_;
    const int avail = (a0_ > 0) + (a1_ > 0);
    const int64_t excess = z0_ - std::min<int64_t>(z0_, avail);
    return lifted_bound_ + 3 * excess;
  }

  void fix(int v, int8_t val, Frame& f) {
    fixed_[v] = val;
    if (st_) {
      f.nsaved = 0;
      for (const VarCell& c : var_cells_[v]) {
        TeamState& ts = team_[c.team_ix];
        f.saved[f.nsaved++] = {c.team_ix, ts};
        account(ts, -1);
        const uint32_t bit = 1u << (c.pos - 1);
        const int y = c.negated ? 1 - val : val;
        ts.fixmask |= bit;
        if (y) ts.yval |= bit;
        ++ts.votes[(c.pos + y) & 1];
        ts.m = team_min(c.team_ix);
        account(ts, +1);
      }
    } else {
      f.saved_bound = raw_bound_;
      raw_bound_ = coefficient_lower_bound(q_, fixed_);
    }
  }

  void unfix(int v, const Frame& f) {
    fixed_[v] = -1;
    if (st_) {
      for (int k = f.nsaved - 1; k >= 0; --k) {
        const auto& [ix, old] = f.saved[k];
        account(team_[ix], -1);
        team_[ix] = old;
        account(team_[ix], +1);
      }
    } else {
      raw_bound_ = f.saved_bound;
    }
  }

  void leaf() {
    // All branch variables fixed: for tournament models raw_bound_ is the
    // exact objective with slacks at their analytic optima, otherwise the
    // exact value of the complete fixing.
    if (raw_bound_ >= best_obj_) return;
    std::vector<uint8_t> z(q_.num_vars(), 0);
    for (int v = 0; v < q_.num_vars(); ++v) {
      if (fixed_[v] > 0) z[v] = 1;
    }
    if (st_) st_->complete_slacks(z);
    best_obj_ = raw_bound_;
    best_z_ = std::move(z);
  }

  void dfs(size_t depth) {
    ++nodes_;
    if (timed_out()) {
      open_min_ = std::min(open_min_, bound());
      return;
    }
    if (bound() >= best_obj_) return;
    if (depth == order_.size()) {
      leaf();
      return;
    }
    const int v = order_[depth];
    const int8_t first = best_z_.empty() ? 0 : static_cast<int8_t>(best_z_[v]);
    // Under complement symmetry the two root branches are mirror images;
    // searching one of them is exhaustive.
    const int branches = (depth == 0 && symmetric_) ? 1 : 2;
    for (int it = 0; it < branches; ++it) {
      const int8_t val = it == 0 ? first : static_cast<int8_t>(1 - first);
      Frame f;
      fix(v, val, f);
      dfs(depth + 1);
      unfix(v, f);
    }
  }

  const QuboModel& q_;
  std::optional<ModelStructure> st_;
  std::vector<int8_t> fixed_;
  std::vector<std::array<VarCell, 2>> var_cells_;
  std::vector<TeamState> team_;
  std::vector<int> order_;
  int L_ = 0;
  int64_t raw_bound_ = 0;     // sum of exact team minima
  int64_t lifted_bound_ = 0;  // nonzero minima lifted to >= 3
  int z0_ = 0;                // teams whose share can still reach 0
  int a0_ = 0;                // of those, teams that can alternate in phase 0
  int a1_ = 0;                // ... in phase 1
  std::vector<uint8_t> best_z_;
  int64_t best_obj_ = kInf;
  bool symmetric_ = false;
  bool has_deadline_ = false;
  Clock::time_point deadline_{};
  bool timed_out_ = false;
  uint64_t tick_ = 0;
  int64_t open_min_ = kInf;
  uint64_t nodes_ = 0;
};

}  // namespace

SolveResult solve_branch_and_bound(const QuboModel& q, double time_limit_s) {
  if (q.num_vars() == 0) {
    SolveResult res;
    res.has_solution = true;
    res.objective = q.offset();
    res.proven_optimal = true;
    res.lower_bound = res.objective;
    res.stats.nodes = 1;
    return res;
  }
  return Bnb(q, time_limit_s).run();
}

}  // namespace breakqubo
