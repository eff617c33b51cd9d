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

#include "structure.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace breakqubo {

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

// Home/away value of a cell under a partial fixing: -1 when the quad variable
// is still free, otherwise the cell's 0/1 value.
int forced_y(const CellRef& c, std::span<const int8_t> fixed) {
  const int8_t f = fixed[c.var];
  if (f < 0) return -1;
  return c.negated ? 1 - f : f;
}

// CC(3) window term with the slack minimized out unless it is fixed.
int64_t cc3_window(const ModelStructure& st, std::span<const int8_t> fixed,
                   int team, int s, int sum4) {
  const int64_t p = st.penalty();
  const int8_t f = fixed[st.slack_var(team, s)];
  if (f >= 0) return p * (sum4 + f - 2) * (sum4 + f - 3);
  return p * std::min((sum4 - 2) * (sum4 - 3), (sum4 - 1) * (sum4 - 2));
}

// Full share of one team at a complete first-half pattern y[0..L-1]
// (second-half values are the complements).
int64_t eval_team_share(const ModelStructure& st, int team, const uint8_t* y,
                        std::span<const int8_t> fixed) {
  const int L = st.positions();
  auto w = [&](int sigma) -> int {
    return sigma <= L ? y[sigma - 1] : 1 - y[sigma - L - 1];
  };
  int64_t v = 0;
  for (int p = 1; p < L; ++p) v += 2 * (y[p - 1] == y[p]);
  v += (y[L - 1] != y[0]);  // break across the half boundary, counted once
  if (st.has_cc2()) {
    const int64_t pen = st.penalty();
    for (int s = 1; s <= L; ++s) {
      const int sum = w(s) + w(s + 1) + w(s + 2);
      v += pen * (sum - 1) * (sum - 2);
    }
  }
  if (st.has_cc3()) {
    for (int s = 1; s <= L; ++s) {
      v += cc3_window(st, fixed, team, s, w(s) + w(s + 1) + w(s + 2) + w(s + 3));
    }
  }
  return v;
}

}  // namespace

std::optional<ModelStructure> ModelStructure::recover(const QuboModel& q) {
  const int n = q.n();
  if (!q.has_meta() || n < 2) return std::nullopt;
  const int L = 2 * n - 1;
  const int teams = 2 * n;
  const int match = n * L;
  const bool cc2 = q.cc_mode() == CcMode::Cc2 || q.cc_mode() == CcMode::Cc2And3;
  const bool cc3 = q.cc_mode() == CcMode::Cc3 || q.cc_mode() == CcMode::Cc2And3;
  const int slack = cc3 ? teams * L : 0;
  if (q.num_vars() != match + slack) return std::nullopt;
  if (static_cast<int>(q.var_meta().size()) != q.num_vars()) return std::nullopt;
  if (cc2 || cc3 ? q.penalty() < 1 : q.penalty() != 0) return std::nullopt;

  // Match variables first (mirrored quads, strictly increasing), slacks after
  // them in (team, slot) order; the quads must tile the (team, slot) grid.
  MeetingSet ms;
  try {
    ms = meeting_set_from_meta(q);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (ms.num_vars() != match) return std::nullopt;
  for (const MeetingQuad& quad : ms.quads) {
    if (quad.s1 > L || quad.s2 != quad.s1 + L) return std::nullopt;
  }
  if (std::adjacent_find(ms.quads.begin(), ms.quads.end(),
                         std::greater_equal<MeetingQuad>{}) != ms.quads.end()) {
    return std::nullopt;
  }
  for (int v = match; v < q.num_vars(); ++v) {
    const VarMeta& m = q.var_meta()[v];
    const int k = v - match;
    if (m.kind != VarMeta::Kind::Slack || m.team != k / L + 1 ||
        m.slot != k % L + 1) {
      return std::nullopt;
    }
  }

  // Re-expanding the recovered structure must reproduce the polynomial
  // exactly; otherwise the model was edited and the shares would be wrong.
  QuboModel expect;
  try {
    expect = build_model(ms, q.cc_mode(), q.penalty());
  } catch (const std::exception&) {
    return std::nullopt;
  }
  QuboModel got = q;
  got.canonicalize();
  expect.canonicalize();
  if (!(got == expect)) return std::nullopt;

  ModelStructure st;
  st.n_ = n;
  st.num_vars_ = q.num_vars();
  st.num_match_vars_ = match;
  st.slack_base_ = match;
  st.penalty_ = q.penalty();
  st.cc2_ = cc2;
  st.cc3_ = cc3;
  st.team_cells_.assign(teams, std::vector<CellRef>(L));
  for (int t = 1; t <= teams; ++t) {
    for (int p = 1; p <= L; ++p) st.team_cells_[t - 1][p - 1] = ms.cell(t, p);
  }
  st.var_teams_.assign(q.num_vars(), {});
  for (int v = 0; v < match; ++v) {
    st.var_teams_[v] = {ms.quads[v].t1, ms.quads[v].t2};
  }
  for (int v = match; v < q.num_vars(); ++v) {
    st.var_teams_[v] = {q.var_meta()[v].team};
  }
  return st;
}

int64_t ModelStructure::team_min(int team, std::span<const int8_t> fixed) const {
  if (static_cast<int>(fixed.size()) != num_vars_) {
    throw std::invalid_argument("team_min: fixing vector length mismatch");
  }
  if (team < 1 || team > teams()) {
    throw std::invalid_argument("team_min: team out of range");
  }
  return positions() <= 6 ? team_min_enumerate(team, fixed)
                          : team_min_dp(team, fixed);
}

int64_t ModelStructure::bound(std::span<const int8_t> fixed) const {
  int64_t total = 0;
  for (int t = 1; t <= teams(); ++t) total += team_min(t, fixed);
  return total;
}

int64_t ModelStructure::team_min_enumerate(int team,
                                           std::span<const int8_t> fixed) const {
  const int L = positions();
  std::array<int, 6> fv{};
  for (int p = 1; p <= L; ++p) fv[p - 1] = forced_y(cell(team, p), fixed);
  int64_t best = kInf;
  std::array<uint8_t, 6> y{};
  for (int mask = 0; mask < (1 << L); ++mask) {
    bool ok = true;
    for (int p = 0; p < L; ++p) {
      y[p] = (mask >> p) & 1;
      if (fv[p] >= 0 && y[p] != fv[p]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    best = std::min(best, eval_team_share(*this, team, y.data(), fixed));
  }
  return best;
}

// Sweep DP over the first-half pattern with a three-position window, run once
// per admissible (y1, y2, y3) prefix so the wrap-around terms (the boundary
// break and the windows that reach into the mirrored half) can be settled at
// the end of the chain. Needs L >= 7 so prefix and tail don't overlap.
int64_t ModelStructure::team_min_dp(int team, std::span<const int8_t> fixed) const {
  const int L = positions();
  std::vector<int> fv(L);
  for (int p = 1; p <= L; ++p) fv[p - 1] = forced_y(cell(team, p), fixed);
  auto lo = [&](int p) { return fv[p - 1] < 0 ? 0 : fv[p - 1]; };
  auto hi = [&](int p) { return fv[p - 1] < 0 ? 1 : fv[p - 1]; };
  const int64_t pen = penalty_;
  auto cc2v = [&](int a, int b, int c) -> int64_t {
    const int sum = a + b + c;
    return pen * (sum - 1) * (sum - 2);
  };

  int64_t best = kInf;
  for (int y1 = lo(1); y1 <= hi(1); ++y1) {
    for (int y2 = lo(2); y2 <= hi(2); ++y2) {
      for (int y3 = lo(3); y3 <= hi(3); ++y3) {
        std::array<int64_t, 8> dp;
        dp.fill(kInf);
        int64_t c0 = 2 * (y1 == y2) + 2 * (y2 == y3);
        if (cc2_) c0 += cc2v(y1, y2, y3);
        dp[(y1 << 2) | (y2 << 1) | y3] = c0;
        for (int p = 3; p < L; ++p) {
          std::array<int64_t, 8> ndp;
          ndp.fill(kInf);
          for (int s = 0; s < 8; ++s) {
            if (dp[s] >= kInf) continue;
            const int ym2 = (s >> 2) & 1;  // y_{p-2}
            const int ym1 = (s >> 1) & 1;  // y_{p-1}
            const int y0 = s & 1;          // y_p
            for (int b = lo(p + 1); b <= hi(p + 1); ++b) {
              int64_t c = dp[s] + 2 * (y0 == b);
              if (cc2_) c += cc2v(ym1, y0, b);
              if (cc3_) c += cc3_window(*this, fixed, team, p - 2,
                                        ym2 + ym1 + y0 + b);
              const int ns = (ym1 << 2) | (y0 << 1) | b;
              ndp[ns] = std::min(ndp[ns], c);
            }
          }
          dp = ndp;
        }
        const int m1 = 1 - y1, m2 = 1 - y2, m3 = 1 - y3;
        for (int s = 0; s < 8; ++s) {
          if (dp[s] >= kInf) continue;
          const int a = (s >> 2) & 1;  // y_{L-2}
          const int b = (s >> 1) & 1;  // y_{L-1}
          const int c = s & 1;         // y_L
          int64_t v = dp[s] + (c != y1);
          if (cc2_) v += cc2v(b, c, m1) + cc2v(c, m1, m2);
          if (cc3_) {
            v += cc3_window(*this, fixed, team, L - 2, a + b + c + m1);
            v += cc3_window(*this, fixed, team, L - 1, b + c + m1 + m2);
            v += cc3_window(*this, fixed, team, L, c + m1 + m2 + m3);
          }
          best = std::min(best, v);
        }
      }
    }
  }
  return best;
}

void ModelStructure::complete_slacks(std::vector<uint8_t>& z) const {
  if (!cc3_) return;
  if (static_cast<int>(z.size()) != num_vars_) {
    throw std::invalid_argument("complete_slacks: bit vector length mismatch");
  }
  for (int t = 1; t <= teams(); ++t) {
    for (int s = 1; s <= positions(); ++s) {
      const int sum4 = cell_value(z, t, s) + cell_value(z, t, s + 1) +
                       cell_value(z, t, s + 2) + cell_value(z, t, s + 3);
      z[slack_var(t, s)] = best_slack_bit(sum4);
    }
  }
}

bool is_complement_invariant(const QuboModel& q) {
  std::vector<int64_t> row(q.num_vars(), 0);  // 2 L_i + sum_{j != i} Q_ij
  int64_t total = 0;                          // sum L + sum Q
  for (const auto& [key, c] : q.terms()) {
    const auto [i, j] = key;
    total += c;
    if (i == j) {
      row[i] += 2 * c;
    } else {
      row[i] += c;
      row[j] += c;
    }
  }
  if (total != 0) return false;
  return std::all_of(row.begin(), row.end(), [](int64_t v) { return v == 0; });
}

}  // namespace breakqubo
