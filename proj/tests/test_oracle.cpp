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
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "shuttlec/bit_matrix.hpp"
#include "shuttlec/random_instances.hpp"
#include "shuttlec/rng.hpp"

using shuttlec::PrimitiveSets;
using shuttlec::SyndromeCircuit;
using shuttlec::oracle::BruteForceResult;

namespace {

// Independent re-enumeration by plain recursion, used to cross-check the
// iterative scan. Deliberately different in shape from the implementation.
int recursive_minimum(const PrimitiveSets& sets) {
  const int s = static_cast<int>(sets.sets.size());
  std::vector<int> slots(s);
  std::iota(slots.begin(), slots.end(), 1);
  std::vector<int> assignment(s, 0);
  std::vector<bool> used(s + 1, false);
  int best = std::numeric_limits<int>::max();

  const std::function<void(int)> place = [&](int label) {
    if (label == s) {
      std::set<int> deltas;
      for (int i = 0; i < s; ++i) {
        for (int p : sets.sets[i]) deltas.insert(p + assignment[i]);
      }
      best = std::min(best, static_cast<int>(deltas.size()));
      return;
    }
    for (int slot = 1; slot <= s; ++slot) {
      if (used[slot]) continue;
      used[slot] = true;
      assignment[label] = slot;
      place(label + 1);
      used[slot] = false;
    }
  };
  if (s == 0) return 0;
  place(0);
  return best;
}

}  // namespace

TEST_CASE("three-set instance has optimum three with a lex-first witness") {
  const shuttlec::BitMatrix checks =
      shuttlec::BitMatrix::from_rows(5, {{1, 2, 3}, {3, 4}, {3}});
  const SyndromeCircuit circuit =
      shuttlec::naive_circuit(checks, shuttlec::Basis::x);
  const BruteForceResult result = shuttlec::oracle::brute_force(circuit);
  CHECK(result.optimum == 3);
  CHECK(result.witness == std::vector<int>{1, 2, 3});
  CHECK(result.explored == 6);
}

TEST_CASE("empty instance is trivially solved") {
  const BruteForceResult result =
      shuttlec::oracle::brute_force(PrimitiveSets{});
  CHECK(result.optimum == 0);
  CHECK(result.witness.empty());
  CHECK(result.explored == 1);
}

TEST_CASE("factorial guard refuses oversized instances") {
  shuttlec::Rng rng(8);
  const SyndromeCircuit circuit =
      shuttlec::random_shor_style_circuit(rng, 4, 6);
  CHECK_THROWS_WITH_AS(shuttlec::oracle::brute_force(circuit, 3),
                       doctest::Contains("SHUTTLEC_ORACLE_LIMIT"),
                       std::invalid_argument);
  CHECK_NOTHROW(shuttlec::oracle::brute_force(circuit, 4));
}

TEST_CASE("default limit reads the environment variable") {
  unsetenv("SHUTTLEC_ORACLE_LIMIT");
  CHECK(shuttlec::oracle::default_limit() == 9);

  setenv("SHUTTLEC_ORACLE_LIMIT", "12", 1);
  CHECK(shuttlec::oracle::default_limit() == 12);

  setenv("SHUTTLEC_ORACLE_LIMIT", "0", 1);
  CHECK_THROWS_AS(shuttlec::oracle::default_limit(), std::runtime_error);

  setenv("SHUTTLEC_ORACLE_LIMIT", "21", 1);
  CHECK_THROWS_AS(shuttlec::oracle::default_limit(), std::runtime_error);

  setenv("SHUTTLEC_ORACLE_LIMIT", "banana", 1);
  CHECK_THROWS_AS(shuttlec::oracle::default_limit(), std::runtime_error);

  unsetenv("SHUTTLEC_ORACLE_LIMIT");
}

TEST_CASE("lower bound is the highest multiplicity") {
  CHECK(shuttlec::oracle::lower_bound({}) == 0);
  CHECK(shuttlec::oracle::lower_bound({3, 1, 3, 3}) == 3);
}

TEST_CASE("witness is optimal, lexicographically first, and reproducible") {
  shuttlec::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int s = rng.uniform(1, 5);
    const SyndromeCircuit circuit =
        shuttlec::random_naive_style_circuit(rng, s, rng.uniform(2, 7));
    const PrimitiveSets sets = shuttlec::primitive_sets(circuit);
    const BruteForceResult result = shuttlec::oracle::brute_force(sets);

    CHECK(result.optimum == recursive_minimum(sets));
    CHECK(shuttlec::distinct_deltas(sets, result.witness) == result.optimum);

    // No lexicographically smaller permutation reaches the optimum.
    std::vector<int> probe(s);
    std::iota(probe.begin(), probe.end(), 1);
    bool earlier_optimal = false;
    do {
      if (probe == result.witness) break;
      if (shuttlec::distinct_deltas(sets, probe) == result.optimum) {
        earlier_optimal = true;
        break;
      }
    } while (std::next_permutation(probe.begin(), probe.end()));
    CHECK_FALSE(earlier_optimal);
  }
}
