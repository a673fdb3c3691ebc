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
#include <vector>

#include "shuttlec/circuits.hpp"

namespace shuttlec::oracle {

struct BruteForceResult {
  int optimum = 0;
  std::vector<int> witness;  // lexicographically smallest optimal layout
  std::uint64_t explored = 0;
};

inline constexpr int kDefaultLimit = 9;

/// Exhausts all s! layouts and returns the minimum distinct-delta count with
/// its first optimal witness in lexicographic order. Kept intentionally
/// simple: this is the ground truth the heuristic passes are checked against.
/// Throws when s exceeds `limit`.
BruteForceResult brute_force(const PrimitiveSets& sets, int limit = kDefaultLimit);
BruteForceResult brute_force(const SyndromeCircuit& circuit,
                             int limit = kDefaultLimit);

/// Factorial-guard limit for brute_force: the SHUTTLEC_ORACLE_LIMIT
/// environment variable when set (must parse as a positive integer), else 9.
int default_limit();

/// Highest multiplicity in the offset multiset; no bijective layout can use
/// fewer shuttles. 0 for an empty multiset.
int lower_bound(const std::vector<int>& values);

}  // namespace shuttlec::oracle
