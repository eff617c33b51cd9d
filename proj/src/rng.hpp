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
#include <vector>

namespace breakqubo {

/// SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
/// generators"). Chosen because it is tiny, fast, and bit-reproducible on
/// every platform, which keeps generated instances byte-identical across
/// runs and machines.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) via the multiply-shift reduction.
  uint64_t below(uint64_t bound) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

/// Deterministic seed derivation: every component seed is a pure function of
/// the master seed and a couple of stream labels, so one top-level seed fixes
/// the whole pipeline.
inline uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b = 0) {
  SplitMix64 g(master ^ 0x6a09e667f3bcc909ULL);
  uint64_t x = g.next() + a * 0xbf58476d1ce4e5b9ULL;
  SplitMix64 h(x);
  return SplitMix64(h.next() + b * 0x94d049bb133111ebULL).next();
}

/// Fisher-Yates shuffle driven by SplitMix64.
template <typename T>
void seeded_shuffle(std::vector<T>& items, uint64_t seed) {
  SplitMix64 g(seed);
  for (size_t i = items.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(g.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace breakqubo
