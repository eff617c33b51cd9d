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
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "qubo.hpp"

namespace breakqubo {

/// Weighted max-cut instance tied to a QUBO by the exact integer identity
///
///   scale * objective(z) = constant - cut(partition(z))
///
/// where partition(z) puts node i on the anchor's side iff z_i = 0. Weights
/// stay integral by scaling: scale is 1 when every off-diagonal coefficient
/// is even (always the case for the tournament models, whose quadratic terms
/// are built from doubled products) and 2 otherwise. Minimizing the objective
/// and maximizing the cut are therefore the same problem.
struct MaxCutInstance {
  int num_nodes = 0;  // variables plus the anchor
  int anchor = 0;     // 0-based anchor node id
  int64_t scale = 1;
  int64_t constant = 0;
  std::vector<std::tuple<int, int, int64_t>> edges;  // u < v, 0-based, nonzero

  bool operator==(const MaxCutInstance&) const = default;
};

MaxCutInstance qubo_to_maxcut(const QuboModel& q);

/// Side labels (0/1, anchor gets 0) of the partition induced by a bit vector.
std::vector<uint8_t> partition_of(const MaxCutInstance& mc,
                                  std::span<const uint8_t> z);

/// Total weight of edges crossing the given partition.
int64_t cut_weight(const MaxCutInstance& mc, std::span<const uint8_t> side);

/// Inverse of partition_of: z_i = 1 iff node i is separated from the anchor.
std::vector<uint8_t> cut_to_bits(const MaxCutInstance& mc,
                                 std::span<const uint8_t> side);

/// Text form. Header comments keep the identity reconstructible:
///   # scale <s>
///   # constant <c>
///   # anchor <node>   (1-indexed)
/// then "<nodes> <edges>" and one "u v w" line per edge, 1-indexed.
std::string maxcut_to_rudy(const MaxCutInstance& mc);
MaxCutInstance maxcut_from_rudy(const std::string& text);

void save_maxcut(const MaxCutInstance& mc, const std::string& path);
MaxCutInstance load_maxcut(const std::string& path);

}  // namespace breakqubo
