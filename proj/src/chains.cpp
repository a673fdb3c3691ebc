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

#include "shuttlec/chains.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace shuttlec {

std::size_t Chain::filled() const {
  return static_cast<std::size_t>(
      std::count_if(slots.begin(), slots.end(),
                    [](int v) { return v != kChainGap; }));
}

bool Chain::gap_free() const {
  return std::none_of(slots.begin(), slots.end(),
                      [](int v) { return v == kChainGap; });
}

int max_multiplicity(const std::vector<int>& values) {
  std::unordered_map<int, int> counts;
  int best = 0;
  for (int v : values) best = std::max(best, ++counts[v]);
  return best;
}

ChainSet make_chains(std::vector<int> values) {
  if (values.empty()) return {};
  for (int v : values) {
    if (v < 0) throw std::invalid_argument("offsets must be non-negative");
  }
  std::sort(values.begin(), values.end(), std::greater<int>());
  const int max_value = values.front();
  const std::size_t width = static_cast<std::size_t>(max_value) + 1;
  const std::size_t rows = static_cast<std::size_t>(max_multiplicity(values));

  // Row-major grid; the slot for value v is max_value - v, so each row reads
  // as a descending run once filled.
  std::vector<std::vector<int>> grid(rows, std::vector<int>(width, kChainGap));
  for (int v : values) {
    const std::size_t slot = static_cast<std::size_t>(max_value - v);
    for (std::vector<int>& row : grid) {
      if (row[slot] == kChainGap) {
        row[slot] = v;
        break;
      }
    }
  }

  ChainSet chains;
  chains.reserve(rows);
  for (std::vector<int>& row : grid) {
    auto first = std::find_if(row.begin(), row.end(),
                              [](int v) { return v != kChainGap; });
    auto last = std::find_if(row.rbegin(), row.rend(),
                             [](int v) { return v != kChainGap; });
    Chain chain;
    chain.slots.assign(first, last.base());
    chains.push_back(std::move(chain));
  }
  return chains;
}

}  // namespace shuttlec
