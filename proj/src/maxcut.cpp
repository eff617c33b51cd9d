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

#include "maxcut.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace breakqubo {

MaxCutInstance qubo_to_maxcut(const QuboModel& q) {
  const int nv = q.num_vars();
  MaxCutInstance mc;
  mc.num_nodes = nv + 1;
  mc.anchor = nv;
  mc.scale = 1;
  for (const auto& [key, c] : q.terms()) {
    if (key.first != key.second && (c % 2) != 0) {
      mc.scale = 2;  // halving an odd coefficient would leave the integers
      break;
    }
  }
  // cut = sum over variable pairs of w_ij [z_i != z_j] plus anchor edges
  // w_i* [z_i = 1]. Matching coefficients of scale*objective = constant - cut:
  //   w_ij = scale * Q_ij / 2,   w_i* = -scale * L_i - sum_j w_ij,
  //   constant = scale * offset.
  std::vector<int64_t> anchor_w(nv, 0);
  for (const auto& [key, c] : q.terms()) {
    const auto [i, j] = key;
    if (i == j) {
      anchor_w[i] -= mc.scale * c;
    } else {
      const int64_t w = mc.scale * c / 2;
      mc.edges.emplace_back(i, j, w);
      anchor_w[i] -= w;
      anchor_w[j] -= w;
    }
  }
  for (int i = 0; i < nv; ++i) {
    if (anchor_w[i] != 0) mc.edges.emplace_back(i, mc.anchor, anchor_w[i]);
  }
  mc.constant = mc.scale * q.offset();
  return mc;
}

std::vector<uint8_t> partition_of(const MaxCutInstance& mc,
                                  std::span<const uint8_t> z) {
  if (static_cast<int>(z.size()) != mc.num_nodes - 1) {
    throw std::invalid_argument("partition_of: bit vector length mismatch");
  }
  std::vector<uint8_t> side(mc.num_nodes, 0);
  for (int i = 0; i < mc.num_nodes - 1; ++i) {
    const int node = i >= mc.anchor ? i + 1 : i;  // skip over the anchor slot
    side[node] = z[i] ? 1 : 0;
  }
  side[mc.anchor] = 0;
  return side;
}

int64_t cut_weight(const MaxCutInstance& mc, std::span<const uint8_t> side) {
  if (static_cast<int>(side.size()) != mc.num_nodes) {
    throw std::invalid_argument(
        "cut_weight: partition must label every node including the anchor");
  }
  int64_t total = 0;
  for (const auto& [u, v, w] : mc.edges) {
    if (side[u] != side[v]) total += w;
  }
  return total;
}

std::vector<uint8_t> cut_to_bits(const MaxCutInstance& mc,
                                 std::span<const uint8_t> side) {
  if (static_cast<int>(side.size()) != mc.num_nodes) {
    throw std::invalid_argument(
        "cut_to_bits: partition must label every node including the anchor");
  }
  std::vector<uint8_t> z;
  z.reserve(mc.num_nodes - 1);
  for (int node = 0; node < mc.num_nodes; ++node) {
    if (node == mc.anchor) continue;
    z.push_back(side[node] != side[mc.anchor] ? 1 : 0);
  }
  return z;
}

std::string maxcut_to_rudy(const MaxCutInstance& mc) {
  std::ostringstream os;
  os << "# max-cut form of a minimization problem:"
        " scale * objective = constant - cut\n";
  os << "# scale " << mc.scale << '\n';
  os << "# constant " << mc.constant << '\n';
  os << "# anchor " << mc.anchor + 1 << '\n';
  os << mc.num_nodes << ' ' << mc.edges.size() << '\n';
  for (const auto& [u, v, w] : mc.edges) {
    os << u + 1 << ' ' << v + 1 << ' ' << w << '\n';
  }
  return os.str();
}

MaxCutInstance maxcut_from_rudy(const std::string& text) {
  MaxCutInstance mc;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  bool have_anchor = false;
  size_t expected_edges = 0;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ls(line.substr(1));
      std::string key;
      int64_t value = 0;
      if (ls >> key >> value) {
        if (key == "scale") mc.scale = value;
        else if (key == "constant") mc.constant = value;
        else if (key == "anchor") {
          mc.anchor = static_cast<int>(value) - 1;
          have_anchor = true;
        }
      }
      continue;
    }
    std::istringstream ls(line);
    if (!have_header) {
      if (!(ls >> mc.num_nodes >> expected_edges) || mc.num_nodes < 1) {
        throw ParseError("rudy: bad size line " + std::to_string(line_no) +
                         ", expected '<nodes> <edges>'");
      }
      have_header = true;
      continue;
    }
    int u = 0, v = 0;
    int64_t w = 0;
    if (!(ls >> u >> v >> w)) {
      throw ParseError("rudy: bad edge at line " + std::to_string(line_no));
    }
    if (u < 1 || v < 1 || u > mc.num_nodes || v > mc.num_nodes || u == v) {
      throw ParseError("rudy: edge endpoints out of range at line " +
                       std::to_string(line_no));
    }
    if (u > v) std::swap(u, v);
    mc.edges.emplace_back(u - 1, v - 1, w);
  }
  if (!have_header) throw ParseError("rudy: missing '<nodes> <edges>' line");
  if (mc.edges.size() != expected_edges) {
    throw ParseError("rudy: expected " + std::to_string(expected_edges) +
                     " edges, found " + std::to_string(mc.edges.size()));
  }
  if (!have_anchor) mc.anchor = mc.num_nodes - 1;
  if (mc.anchor < 0 || mc.anchor >= mc.num_nodes) {
    throw ParseError("rudy: anchor node out of range");
  }
  if (mc.scale != 1 && mc.scale != 2) {
    throw ParseError("rudy: scale must be 1 or 2");
  }
  return mc;
}

void save_maxcut(const MaxCutInstance& mc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << maxcut_to_rudy(mc);
}

MaxCutInstance load_maxcut(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return maxcut_from_rudy(buf.str());
}

}  // namespace breakqubo
