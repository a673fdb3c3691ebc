// Copyright 2026 The shuttlec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace shuttlec {

/// Seed-stable pseudo-random generator (SplitMix64 core).
///
/// Used for the randomized verification batches; the standard distributions
/// are implementation-defined across toolchains, so sampling is done here
/// with plain rejection to keep batches reproducible from a seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  int uniform(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t reject_above = ~0ULL - (~0ULL % span) - 1;
    std::uint64_t draw = next_u64();
    while (draw > reject_above) draw = next_u64();
    return lo + static_cast<int>(draw % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace shuttlec
