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

#include "shuttlec/sssc.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace shuttlec {

std::vector<int> LadderPacking::outputs() const {
  std::set<int> sums;
  for (std::size_t r = 0; r < value_at.size(); ++r) {
    sums.insert(value_at[r] + static_cast<int>(r) + 1);
  }
  return std::vector<int>(sums.begin(), sums.end());
}

namespace {

struct PoolEntry {
  Chain chain;
  int id;  // creation order; split pieces get fresh ids
};

// Most filled first, then higher lead value, then earlier creation.
bool pool_before(const PoolEntry& a, const PoolEntry& b) {
  return std::make_tuple(-static_cast<long long>(a.chain.filled()),
                         -a.chain.first_value(), a.id) <
         std::make_tuple(-static_cast<long long>(b.chain.filled()),
                         -b.chain.first_value(), b.id);
}

// Maximal hole runs as [start, end] slot index pairs.
std::vector<std::pair<std::size_t, std::size_t>> hole_runs(const Chain& c) {
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  std::size_t i = 0;
  while (i < c.slots.size()) {
    if (c.slots[i] != kChainGap) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < c.slots.size() && c.slots[j + 1] == kChainGap) ++j;
    runs.emplace_back(i, j);
    i = j + 1;
  }
  return runs;
}

// Splits off the piece before the chosen hole run and the piece after it.
// Both pieces start and end on values because the runs are maximal.
std::pair<Chain, Chain> split_at(const Chain& c,
                                 std::pair<std::size_t, std::size_t> run) {
  Chain left;
  left.slots.assign(c.slots.begin(),
                    c.slots.begin() + static_cast<std::ptrdiff_t>(run.first));
  Chain right;
  right.slots.assign(c.slots.begin() + static_cast<std::ptrdiff_t>(run.second + 1),
                     c.slots.end());
  return {std::move(left), std::move(right)};
}

}  // namespace

LadderPacking sssc_pack(ChainSet chains, int ladder_size) {
  if (ladder_size < 0) throw std::invalid_argument("negative ladder size");
  long long filled_total = 0;
  for (const Chain& c : chains) {
    if (c.slots.empty() || c.slots.front() == kChainGap ||
        c.slots.back() == kChainGap) {
      throw std::invalid_argument("chains must start and end on values");
    }
    filled_total += static_cast<long long>(c.filled());
  }
  if (filled_total != ladder_size) {
    throw std::invalid_argument(
        "chain elements do not add up to the ladder size");
  }

  std::vector<PoolEntry> pool;
  pool.reserve(chains.size());
  int next_id = 0;
  for (Chain& c : chains) pool.push_back(PoolEntry{std::move(c), next_id++});

  LadderPacking packing;
  packing.value_at.assign(static_cast<std::size_t>(ladder_size), kChainGap);
  std::vector<bool> occupied(static_cast<std::size_t>(ladder_size), false);

  while (!pool.empty()) {
    std::sort(pool.begin(), pool.end(), pool_before);
    PoolEntry entry = std::move(pool.front());
    pool.erase(pool.begin());
    const Chain& chain = entry.chain;
    const std::size_t span = chain.span();

    bool placed = false;
    for (std::size_t start = 0;
         span <= static_cast<std::size_t>(ladder_size) &&
         start + span <= static_cast<std::size_t>(ladder_size);
         ++start) {
      bool fits = true;
      for (std::size_t j = 0; j < span; ++j) {
        if (chain.slots[j] != kChainGap && occupied[start + j]) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (std::size_t j = 0; j < span; ++j) {
        if (chain.slots[j] == kChainGap) continue;
        occupied[start + j] = true;
        packing.value_at[start + j] = chain.slots[j];
      }
      placed = true;
      break;
    }
    if (placed) continue;

    // No feasible offset: shrink the chain and keep going. A hole-free chain
    // sheds its lead element; otherwise shed the smaller end piece, splitting
    // at the first hole when it sits strictly closer to the front than the
    // last hole sits to the back, and at the last hole otherwise.
    if (span == 1) {
      // Free rungs always match the filled slots still in the pool, so a
      // lone value must fit somewhere.
      throw std::logic_error("single value found no free rung");
    }
    const auto runs = hole_runs(chain);
    Chain left;
    Chain right;
    if (runs.empty()) {
      left.slots.assign(chain.slots.begin(), chain.slots.begin() + 1);
      right.slots.assign(chain.slots.begin() + 1, chain.slots.end());
    } else {
      const std::size_t front_distance = runs.front().first;
      const std::size_t back_distance = span - 1 - runs.back().second;
      const auto& run =
          front_distance < back_distance ? runs.front() : runs.back();
      std::tie(left, right) = split_at(chain, run);
    }
    if (!left.slots.empty()) pool.push_back(PoolEntry{std::move(left), next_id++});
    if (!right.slots.empty()) pool.push_back(PoolEntry{std::move(right), next_id++});
  }
  return packing;
}

namespace {

// Matches each ancilla to a rung holding its offset, lowest label to lowest
// rung. Requires singleton offset sets.
Reindexing match_ancillas_to_rungs(const PrimitiveSets& sets,
                                   const std::vector<int>& value_at) {
  std::map<int, std::vector<int>> rungs_by_value;
  for (std::size_t r = 0; r < value_at.size(); ++r) {
    rungs_by_value[value_at[r]].push_back(static_cast<int>(r) + 1);
  }
  std::map<int, std::size_t> next_rung;
  Reindexing pi;
  pi.slot_of.resize(sets.sets.size());
  for (std::size_t i = 0; i < sets.sets.size(); ++i) {
    const int value = sets.sets[i].front();
    auto it = rungs_by_value.find(value);
    std::size_t& cursor = next_rung[value];
    if (it == rungs_by_value.end() || cursor >= it->second.size()) {
      throw std::logic_error("ladder packing lost an offset value");
    }
    pi.slot_of[i] = it->second[cursor++];
  }
  return pi;
}

void require_singletons(const PrimitiveSets& sets) {
  if (!all_singleton(sets)) {
    throw std::invalid_argument(
        "ladder packing needs one offset per ancilla; row-per-check circuits "
        "with wider checks are not eligible");
  }
}

}  // namespace

SsscResult sssc(const SyndromeCircuit& circuit, bool allow_mixed) {
  const PrimitiveSets sets = primitive_sets(circuit);
  require_singletons(sets);
  std::vector<int> values;
  values.reserve(sets.sets.size());
  for (const std::vector<int>& set : sets.sets) values.push_back(set.front());

  SsscResult result;
  result.packing = sssc_pack(make_chains(values), circuit.s);
  // The circuit's current layout is itself a valid packing (ancilla i on
  // rung positions[i]). The greedy can lose to it because splits are
  // committed chain by chain, and a compilation pass must never make the
  // circuit worse, so keep the current layout whenever it is strictly
  // better.
  LadderPacking input_layout;
  input_layout.value_at.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    input_layout.value_at[static_cast<std::size_t>(sets.positions[i] - 1)] =
        values[i];
  }
  if (input_layout.shuttles() < result.packing.shuttles()) {
    result.packing = std::move(input_layout);
  }
  result.reindexing = match_ancillas_to_rungs(sets, result.packing.value_at);
  result.schedule = gate_shuffle(circuit, result.reindexing, allow_mixed);
  if (result.schedule.shuttles() != result.packing.shuttles()) {
    throw std::logic_error("schedule and packing disagree on shuttle count");
  }
  return result;
}

BlanksResult blanks_compile(const ChainSet& chains) {
  BlanksResult result;
  result.shuttles = static_cast<int>(chains.size());
  for (const Chain& chain : chains) {
    if (chain.slots.empty() || chain.slots.front() == kChainGap ||
        chain.slots.back() == kChainGap) {
      throw std::invalid_argument("chains must start and end on values");
    }
    result.blanks +=
        static_cast<long long>(chain.span() - chain.filled());
    bool in_hole = false;
    for (int v : chain.slots) {
      if (v == kChainGap && !in_hole) ++result.gap_runs;
      in_hole = v == kChainGap;
    }
    result.layout.insert(result.layout.end(), chain.slots.begin(),
                         chain.slots.end());
  }
  return result;
}

BlanksSchedule blanks_schedule(const SyndromeCircuit& circuit,
                               bool allow_mixed) {
  const PrimitiveSets sets = primitive_sets(circuit);
  require_singletons(sets);
  if (!allow_mixed && !circuit.gates.empty()) {
    const Basis first = circuit.gates.front().basis;
    for (const Gate& gate : circuit.gates) {
      if (gate.basis != first) {
        throw std::invalid_argument(
            "circuit mixes X and Z checks; compile each basis separately or "
            "pass the pedagogical combined flag");
      }
    }
  }
  std::vector<int> values;
  values.reserve(sets.sets.size());
  for (const std::vector<int>& set : sets.sets) values.push_back(set.front());

  BlanksSchedule out;
  out.result = blanks_compile(make_chains(values));

  std::map<int, std::vector<int>> rungs_by_value;
  for (std::size_t r = 0; r < out.result.layout.size(); ++r) {
    if (out.result.layout[r] == kChainGap) continue;
    rungs_by_value[out.result.layout[r]].push_back(static_cast<int>(r) + 1);
  }
  std::map<int, std::size_t> cursor;
  out.rung_of.resize(sets.sets.size());
  for (std::size_t i = 0; i < sets.sets.size(); ++i) {
    const int value = sets.sets[i].front();
    out.rung_of[i] = rungs_by_value[value][cursor[value]++];
  }

  // Within one concatenated chain, value + rung is constant, so grouping by
  // that sum yields exactly one group per chain.
  std::map<int, ScheduleGroup> by_delta;
  for (const Gate& gate : circuit.gates) {
    const int rung = out.rung_of[static_cast<std::size_t>(gate.ancilla - 1)];
    const int delta = (circuit.n - gate.data) + rung;
    ScheduleGroup& group = by_delta[delta];
    group.delta = delta;
    group.gates.push_back(gate);
  }
  for (auto& [delta, group] : by_delta) out.groups.push_back(std::move(group));
  if (static_cast<int>(out.groups.size()) != out.result.shuttles) {
    throw std::logic_error("blanks layout produced an unexpected group count");
  }
  return out;
}

}  // namespace shuttlec
