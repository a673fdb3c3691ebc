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

#include "shuttlec/random_instances.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace shuttlec {

namespace {

// Fisher-Yates with the seed-stable generator.
void shuffle_ints(Rng& rng, std::vector<int>& values) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j =
        static_cast<std::size_t>(rng.uniform(0, static_cast<int>(i) - 1));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace

SyndromeCircuit circuit_from_offsets(int n, const std::vector<int>& values,
                                     Basis basis) {
  std::vector<std::vector<int>> supports;
  supports.reserve(values.size());
  for (int p : values) {
    if (p < 0 || p >= n) {
      throw std::invalid_argument("offset outside 0..n-1");
    }
    supports.push_back({n - p});
  }
  return shor_circuit(
      BitMatrix::from_rows(static_cast<std::size_t>(n), supports), basis);
}

SyndromeCircuit random_shor_style_circuit(Rng& rng, int s, int n) {
  std::vector<int> values(static_cast<std::size_t>(s));
  for (int& v : values) v = rng.uniform(0, n - 1);
  return circuit_from_offsets(n, values);
}

SyndromeCircuit random_naive_style_circuit(Rng& rng, int s, int n) {
  std::vector<std::vector<int>> supports;
  supports.reserve(static_cast<std::size_t>(s));
  std::vector<int> columns(static_cast<std::size_t>(n));
  std::iota(columns.begin(), columns.end(), 1);
  for (int r = 0; r < s; ++r) {
    shuffle_ints(rng, columns);
    const int weight = rng.uniform(1, n);
    std::vector<int> row(columns.begin(), columns.begin() + weight);
    std::sort(row.begin(), row.end());
    supports.push_back(std::move(row));
  }
  return naive_circuit(
      BitMatrix::from_rows(static_cast<std::size_t>(n), supports), Basis::x);
}

BitMatrix random_column_regular_matrix(Rng& rng, int rows, int cols,
                                       int column_weight) {
  if (column_weight < 1 || rows < column_weight) {
    throw std::invalid_argument("need rows >= column_weight >= 1");
  }
  // cols*weight cells cannot cover more rows than that, so zero rows would
  // be unavoidable.
  if (static_cast<long long>(rows) >
      static_cast<long long>(cols) * column_weight) {
    throw std::invalid_argument(
        "need rows <= cols * column_weight to avoid zero rows");
  }
  std::vector<int> row_ids(static_cast<std::size_t>(rows));
  std::iota(row_ids.begin(), row_ids.end(), 0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    BitMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (int c = 0; c < cols; ++c) {
      shuffle_ints(rng, row_ids);
      for (int k = 0; k < column_weight; ++k) {
        m.set(static_cast<std::size_t>(row_ids[static_cast<std::size_t>(k)]),
              static_cast<std::size_t>(c), true);
      }
    }
    bool ok = true;
    for (int r = 0; r < rows && ok; ++r) {
      ok = m.row_weight(static_cast<std::size_t>(r)) > 0;
    }
    if (ok) return m;
  }
  throw std::runtime_error("could not sample a matrix without zero rows");
}

PlantedPartition random_partition_instance(Rng& rng, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int target = rng.uniform(20, 48);
    const int lo = target / 4 + 1;        // smallest integer > target/4
    const int hi = (target - 1) / 2;      // largest integer < target/2
    if (lo > hi) continue;
    std::vector<long long> weights;
    std::vector<int> owner;  // which planted triple each weight belongs to
    bool ok = true;
    for (int g = 0; g < m && ok; ++g) {
      ok = false;
      for (int draw = 0; draw < 1000; ++draw) {
        const int x = rng.uniform(lo, hi);
        const int y = rng.uniform(lo, hi);
        const int z = target - x - y;
        if (z < lo || z > hi) continue;
        weights.insert(weights.end(), {static_cast<long long>(x),
                                       static_cast<long long>(y),
                                       static_cast<long long>(z)});
        owner.insert(owner.end(), {g, g, g});
        ok = true;
        break;
      }
    }
    if (!ok) continue;

    std::vector<int> order(weights.size());
    std::iota(order.begin(), order.end(), 0);
    shuffle_ints(rng, order);
    PlantedPartition planted;
    planted.instance.target = target;
    planted.instance.weights.resize(weights.size());
    std::vector<std::vector<int>> members(static_cast<std::size_t>(m));
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      const int source = order[pos];
      planted.instance.weights[pos] = weights[static_cast<std::size_t>(source)];
      members[static_cast<std::size_t>(owner[static_cast<std::size_t>(source)])]
          .push_back(static_cast<int>(pos) + 1);
    }
    for (std::vector<int>& triple : members) {
      std::sort(triple.begin(), triple.end());
      planted.triples.push_back(
          hardness::Triple{triple[0], triple[1], triple[2]});
    }
    return planted;
  }
  throw std::runtime_error("could not sample a partition instance");
}

}  // namespace shuttlec
