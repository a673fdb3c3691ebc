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

#include "shuttlec/circuits.hpp"

namespace shuttlec {

/// An assignment of ancilla labels to bottom-row slots. slot_of[i-1] is the
/// slot of ancilla i; a valid re-indexing is a permutation of 1..s.
struct Reindexing {
  std::vector<int> slot_of;

  static Reindexing identity(int s);
  bool is_permutation() const;

  bool operator==(const Reindexing&) const = default;
};

/// All gates sharing one row offset; they execute in a single shuttle stop.
struct ScheduleGroup {
  int delta = 0;
  std::vector<Gate> gates;
};

/// Groups ordered by ascending delta, one shuttle stop each, under the
/// recorded layout. Within a group all data qubits are distinct and all
/// ancillas are distinct (the gates happen simultaneously).
struct ShuttleSchedule {
  Reindexing reindexing;
  std::vector<ScheduleGroup> groups;

  int shuttles() const { return static_cast<int>(groups.size()); }
};

/// Returns the circuit with its layout replaced by `pi`. Gates are untouched,
/// so the per-ancilla offset sets are identical before and after.
SyndromeCircuit apply_reindexing(const SyndromeCircuit& circuit,
                                 const Reindexing& pi);

/// Groups the gates of `circuit` by delta under its current layout, ascending.
/// The shuttle count is exactly the number of distinct deltas, the minimum
/// reachable by reordering gates alone. Mixing X and Z checks in one round is
/// rejected unless `allow_mixed` is set.
ShuttleSchedule gate_shuffle(const SyndromeCircuit& circuit,
                             bool allow_mixed = false);

/// Re-indexes first, then groups.
ShuttleSchedule gate_shuffle(const SyndromeCircuit& circuit,
                             const Reindexing& pi, bool allow_mixed = false);

}  // namespace shuttlec
