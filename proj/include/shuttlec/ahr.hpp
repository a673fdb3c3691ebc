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
#include "shuttlec/schedule.hpp"

namespace shuttlec {

/// Ad-hoc re-indexing: three cheap candidate orderings of the ancillas, each
/// turned into a layout, keeping whichever needs the fewest shuttles.
struct AhrResult {
  Reindexing reindexing;
  ShuttleSchedule schedule;
  int candidate = 0;  // 1..3, which ordering won (lowest index on ties)

  int shuttles() const { return schedule.shuttles(); }
};

/// Candidate orderings, exposed for inspection. The returned vector lists
/// ancilla labels in ladder order (entry j goes to slot j+1).
///   1: by block length max(P_i)+1, longest first.
///   2: by leading air min(P_i), largest first, ties by block length.
///   3: by the sets' lead elements, grouped by repeat count: first
///      occurrences in descending order, then second occurrences, and so on.
/// The lead element of a set is taken to be its largest member; all ties
/// break by ancilla label so the orders are total.
std::vector<int> ahr_candidate_order(const PrimitiveSets& sets, int which);

/// Layout that sends the j-th listed label to slot j+1.
Reindexing order_to_reindexing(const std::vector<int>& labels_in_order);

AhrResult ahr(const SyndromeCircuit& circuit, bool allow_mixed = false);

}  // namespace shuttlec
