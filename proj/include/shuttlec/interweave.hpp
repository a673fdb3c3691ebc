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

namespace shuttlec {

/// Plans the physical realization of a re-indexing with one extra staging
/// row: ancillas parked left-to-right as `staged_order` (entry = target rung)
/// are merged into the main row in batches. Each batch is the longest run of
/// consecutive targets, starting at the smallest unplaced one, whose staging
/// positions strictly increase; such a run can shuttle in together in one
/// combined move. Returns the batches in execution order. A sorted staging
/// row needs one batch, a reversed one needs s.
std::vector<std::vector<int>> interweave_plan(
    const std::vector<int>& staged_order);

}  // namespace shuttlec
