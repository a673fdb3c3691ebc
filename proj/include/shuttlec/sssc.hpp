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

#include <vector>

#include "shuttlec/chains.hpp"
#include "shuttlec/circuits.hpp"
#include "shuttlec/schedule.hpp"

namespace shuttlec {

/// A fully packed ladder: every rung holds exactly one offset value. The
/// shuttle count is the number of distinct value+rung sums.
struct LadderPacking {
  std::vector<int> value_at;  // value_at[r-1] = offset parked at rung r

  std::vector<int> outputs() const;  // distinct value+rung sums, ascending
  int shuttles() const { return static_cast<int>(outputs().size()); }
};

/// Packs chains onto a ladder of `ladder_size` rungs without physical blanks.
/// Chains are placed most-filled-first at the lowest feasible offset (holes
/// may overlap occupied rungs); a chain that fits nowhere sheds its smaller
/// end piece, splitting at the first hole when that hole sits strictly closer
/// to the front than the last hole sits to the back and at the last hole
/// otherwise (a hole-free chain sheds its first element), and the pieces
/// rejoin the pool. Requires the total filled slot count to equal
/// ladder_size; every rung ends up occupied.
LadderPacking sssc_pack(ChainSet chains, int ladder_size);

struct SsscResult {
  Reindexing reindexing;
  ShuttleSchedule schedule;
  LadderPacking packing;

  int shuttles() const { return schedule.shuttles(); }
};

/// Ladder-packing compilation of a circuit whose ancillas each carry exactly
/// one offset (every cat-state-style circuit qualifies). Ancillas are matched
/// to the rungs holding their offset, lowest label to lowest rung. When the
/// greedy packing needs more shuttles than the circuit already gets from its
/// input order, the pass keeps the input layout instead, so the result never
/// loses to plain gate shuffling.
SsscResult sssc(const SyndromeCircuit& circuit, bool allow_mixed = false);

/// Chain concatenation with physical blank sites left in the holes: one
/// shuttle per chain, at the cost of `blanks` extra bottom-row sites.
struct BlanksResult {
  int shuttles = 0;
  long long blanks = 0;    // total missing values across all holes
  long long gap_runs = 0;  // number of contiguous holes
  std::vector<int> layout;  // rung -> value, kChainGap where a blank sits
};

BlanksResult blanks_compile(const ChainSet& chains);

/// Circuit-level blanks compilation: the rung assignment spans s + blanks
/// sites and each chain fires in one shuttle stop.
struct BlanksSchedule {
  BlanksResult result;
  std::vector<int> rung_of;  // ancilla label -> rung in 1..s+blanks
  std::vector<ScheduleGroup> groups;
};

BlanksSchedule blanks_schedule(const SyndromeCircuit& circuit,
                               bool allow_mixed = false);

}  // namespace shuttlec
