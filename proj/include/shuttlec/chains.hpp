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

#include <cstddef>
#include <vector>

namespace shuttlec {

/// Sentinel for a hole inside a chain.
inline constexpr int kChainGap = -1;

/// A maximal run of offsets decreasing by exactly one per slot, with holes
/// where a value is missing. slots.front() and slots.back() are never gaps,
/// and any value at index j equals slots.front() - j.
struct Chain {
  std::vector<int> slots;

  int first_value() const { return slots.front(); }
  std::size_t span() const { return slots.size(); }
  std::size_t filled() const;
  bool gap_free() const;
};

using ChainSet = std::vector<Chain>;

/// Decomposes a multiset of non-negative offsets into the minimum number of
/// descending unit-step chains: values are placed largest-first into the
/// first row whose slot for that value is free, then rows are trimmed. The
/// number of chains equals the highest multiplicity in the input.
ChainSet make_chains(std::vector<int> values);

/// Highest multiplicity of any value; also the chain count of make_chains
/// and a lower bound on the shuttle count of any layout. 0 for empty input.
int max_multiplicity(const std::vector<int>& values);

}  // namespace shuttlec
