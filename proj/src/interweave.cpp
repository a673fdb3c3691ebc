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

#include "shuttlec/interweave.hpp"

#include <stdexcept>

namespace shuttlec {

std::vector<std::vector<int>> interweave_plan(
    const std::vector<int>& staged_order) {
  const int s = static_cast<int>(staged_order.size());
  std::vector<int> position(static_cast<std::size_t>(s), -1);
  for (int i = 0; i < s; ++i) {
    const int target = staged_order[static_cast<std::size_t>(i)];
    if (target < 1 || target > s) {
      throw std::invalid_argument("staging entry out of range 1..s");
    }
    if (position[static_cast<std::size_t>(target - 1)] != -1) {
      throw std::invalid_argument("staging entry repeated");
    }
    position[static_cast<std::size_t>(target - 1)] = i;
  }

  std::vector<std::vector<int>> batches;
  int next = 1;
  while (next <= s) {
    std::vector<int> batch{next};
    while (batch.back() + 1 <= s &&
           position[static_cast<std::size_t>(batch.back())] >
               position[static_cast<std::size_t>(batch.back() - 1)]) {
      batch.push_back(batch.back() + 1);
    }
    next = batch.back() + 1;
    batches.push_back(std::move(batch));
  }
  return batches;
}

}  // namespace shuttlec
