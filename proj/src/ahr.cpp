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

#include "shuttlec/ahr.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace shuttlec {

namespace {

std::vector<int> sorted_labels(std::size_t s) {
  std::vector<int> labels(s);
  std::iota(labels.begin(), labels.end(), 1);
  return labels;
}

const std::vector<int>& set_of(const PrimitiveSets& sets, int label) {
  return sets.sets[static_cast<std::size_t>(label - 1)];
}

}  // namespace

std::vector<int> ahr_candidate_order(const PrimitiveSets& sets, int which) {
  if (sets.sets.empty()) {
    throw std::invalid_argument("no ancillas to order");
  }
  for (const std::vector<int>& set : sets.sets) {
    if (set.empty()) {
      throw std::invalid_argument("an ancilla with no gates cannot be ordered");
    }
  }
  std::vector<int> labels = sorted_labels(sets.sets.size());
  switch (which) {
    case 1:
      // Longest block first; a block spans offsets 0..max(P), so its length
      // is max(P)+1 and sorting by max(P) is equivalent.
      std::sort(labels.begin(), labels.end(), [&](int a, int b) {
        return std::make_tuple(-set_of(sets, a).back(), a) <
               std::make_tuple(-set_of(sets, b).back(), b);
      });
      return labels;
    case 2:
      std::sort(labels.begin(), labels.end(), [&](int a, int b) {
        return std::make_tuple(-set_of(sets, a).front(),
                               -set_of(sets, a).back(), a) <
               std::make_tuple(-set_of(sets, b).front(),
                               -set_of(sets, b).back(), b);
      });
      return labels;
    case 3: {
      // Repeat counts are assigned in label order, so equal lead elements
      // land in successive occurrence groups deterministically.
      std::unordered_map<int, int> seen;
      std::vector<int> occurrence(sets.sets.size());
      for (std::size_t i = 0; i < sets.sets.size(); ++i) {
        occurrence[i] = ++seen[sets.sets[i].back()];
      }
      std::sort(labels.begin(), labels.end(), [&](int a, int b) {
        return std::make_tuple(occurrence[static_cast<std::size_t>(a - 1)],
                               -set_of(sets, a).back(), a) <
               std::make_tuple(occurrence[static_cast<std::size_t>(b - 1)],
                               -set_of(sets, b).back(), b);
      });
      return labels;
    }
    default:
      throw std::invalid_argument("candidate index must be 1, 2, or 3");
  }
}

Reindexing order_to_reindexing(const std::vector<int>& labels_in_order) {
  Reindexing pi;
  pi.slot_of.resize(labels_in_order.size());
  for (std::size_t j = 0; j < labels_in_order.size(); ++j) {
    const int label = labels_in_order[j];
    if (label < 1 || static_cast<std::size_t>(label) > labels_in_order.size()) {
      throw std::invalid_argument("label out of range in ordering");
    }
    pi.slot_of[static_cast<std::size_t>(label - 1)] = static_cast<int>(j) + 1;
  }
  if (!pi.is_permutation()) {
    throw std::invalid_argument("ordering repeats a label");
  }
  return pi;
}

AhrResult ahr(const SyndromeCircuit& circuit, bool allow_mixed) {
  const PrimitiveSets sets = primitive_sets(circuit);
  int best_candidate = 0;
  int best_count = -1;
  Reindexing best_pi;
  for (int which = 1; which <= 3; ++which) {
    Reindexing pi = order_to_reindexing(ahr_candidate_order(sets, which));
    const int count = distinct_deltas(sets, pi.slot_of);
    if (best_candidate == 0 || count < best_count) {
      best_candidate = which;
      best_count = count;
      best_pi = std::move(pi);
    }
  }
  AhrResult result;
  result.candidate = best_candidate;
  result.reindexing = best_pi;
  result.schedule = gate_shuffle(circuit, best_pi, allow_mixed);
  return result;
}

}  // namespace shuttlec
