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

#include "shuttlec/schedule.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace shuttlec {

Reindexing Reindexing::identity(int s) {
  Reindexing pi;
  pi.slot_of.resize(static_cast<std::size_t>(s));
  std::iota(pi.slot_of.begin(), pi.slot_of.end(), 1);
  return pi;
}

bool Reindexing::is_permutation() const {
  std::vector<bool> seen(slot_of.size(), false);
  for (int slot : slot_of) {
    if (slot < 1 || static_cast<std::size_t>(slot) > slot_of.size()) {
      return false;
    }
    if (seen[static_cast<std::size_t>(slot - 1)]) return false;
    seen[static_cast<std::size_t>(slot - 1)] = true;
  }
  return true;
}

SyndromeCircuit apply_reindexing(const SyndromeCircuit& circuit,
                                 const Reindexing& pi) {
  if (static_cast<int>(pi.slot_of.size()) != circuit.s) {
    throw std::invalid_argument("re-indexing size does not match ancilla count");
  }
  if (!pi.is_permutation()) {
    throw std::invalid_argument("re-indexing is not a permutation of 1..s");
  }
  SyndromeCircuit result = circuit;
  result.positions = pi.slot_of;
  return result;
}

namespace {

void check_single_basis(const SyndromeCircuit& circuit, bool allow_mixed) {
  if (allow_mixed || circuit.gates.empty()) return;
  const Basis first = circuit.gates.front().basis;
  for (const Gate& gate : circuit.gates) {
    if (gate.basis != first) {
      throw std::invalid_argument(
          "circuit mixes X and Z checks; compile each basis separately or "
          "pass the pedagogical combined flag");
    }
  }
}

// Within one shuttle stop every gate fires simultaneously, so a data qubit or
// an ancilla appearing twice would be a scheduling contradiction. The delta
// arithmetic rules this out; verify anyway.
void check_group(const ScheduleGroup& group) {
  std::unordered_set<int> data;
  std::unordered_set<int> ancillas;
  for (const Gate& gate : group.gates) {
    if (!data.insert(gate.data).second ||
        !ancillas.insert(gate.ancilla).second) {
      throw std::logic_error("shuttle group reuses a qubit");
    }
  }
}

}  // namespace

ShuttleSchedule gate_shuffle(const SyndromeCircuit& circuit, bool allow_mixed) {
  check_single_basis(circuit, allow_mixed);
  std::map<int, ScheduleGroup> by_delta;
  for (const Gate& gate : circuit.gates) {
    const int delta = gate_delta(circuit, gate);
    ScheduleGroup& group = by_delta[delta];
    group.delta = delta;
    group.gates.push_back(gate);
  }
  ShuttleSchedule schedule;
  schedule.reindexing.slot_of = circuit.positions;
  schedule.groups.reserve(by_delta.size());
  for (auto& [delta, group] : by_delta) {
    check_group(group);
    schedule.groups.push_back(std::move(group));
  }
  return schedule;
}

ShuttleSchedule gate_shuffle(const SyndromeCircuit& circuit,
                             const Reindexing& pi, bool allow_mixed) {
  return gate_shuffle(apply_reindexing(circuit, pi), allow_mixed);
}

}  // namespace shuttlec
