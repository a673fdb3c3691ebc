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

#include "shuttlec/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace shuttlec::oracle {

int default_limit() {
  const char* raw = std::getenv("SHUTTLEC_ORACLE_LIMIT");
  if (raw == nullptr) return kDefaultLimit;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1 || value > 20) {
    throw std::runtime_error(
        "SHUTTLEC_ORACLE_LIMIT must be an integer in 1..20, got \"" +
        std::string(raw) + "\"");
  }
  return static_cast<int>(value);
}

int lower_bound(const std::vector<int>& values) {
  std::unordered_map<int, int> counts;
  int best = 0;
  for (int v : values) best = std::max(best, ++counts[v]);
  return best;
}

BruteForceResult brute_force(const PrimitiveSets& sets, int limit) {
  const int s = static_cast<int>(sets.sets.size());
  if (s > limit) {
    throw std::invalid_argument(
        "layout search over " + std::to_string(s) + " ancillas exceeds the " +
        "limit of " + std::to_string(limit) +
        " (set SHUTTLEC_ORACLE_LIMIT to raise it)");
  }
  int max_offset = 0;
  for (const std::vector<int>& set : sets.sets) {
    for (int p : set) {
      if (p < 0) throw std::invalid_argument("offsets must be non-negative");
      max_offset = std::max(max_offset, p);
    }
  }

  BruteForceResult result;
  if (s == 0) {
    result.explored = 1;
    return result;
  }

  // Version-stamped scratch table: counting distinct deltas per layout
  // without clearing between the s! iterations.
  std::vector<std::uint64_t> stamp(
      static_cast<std::size_t>(max_offset + s) + 1, 0);
  std::uint64_t version = 0;

  std::vector<int> slot_of(static_cast<std::size_t>(s));
  std::iota(slot_of.begin(), slot_of.end(), 1);
  result.optimum = max_offset + s + 1;  // above any reachable count
  do {
    ++result.explored;
    ++version;
    int distinct = 0;
    for (std::size_t i = 0; i < slot_of.size() && distinct < result.optimum;
         ++i) {
      for (int p : sets.sets[i]) {
        const std::size_t delta = static_cast<std::size_t>(p + slot_of[i]);
        if (stamp[delta] != version) {
          stamp[delta] = version;
          ++distinct;
        }
      }
    }
    if (distinct < result.optimum) {
      result.optimum = distinct;
      result.witness = slot_of;
    }
  } while (std::next_permutation(slot_of.begin(), slot_of.end()));
  return result;
}

BruteForceResult brute_force(const SyndromeCircuit& circuit, int limit) {
  return brute_force(primitive_sets(circuit), limit);
}

}  // namespace shuttlec::oracle
