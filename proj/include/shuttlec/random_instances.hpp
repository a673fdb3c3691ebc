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

#include "shuttlec/bit_matrix.hpp"
#include "shuttlec/circuits.hpp"
#include "shuttlec/hardness.hpp"
#include "shuttlec/rng.hpp"

namespace shuttlec {

/// One ancilla per weight-1 check row: a cat-state-style circuit whose
/// offset multiset is `values` (each in 0..n-1), in ancilla order.
SyndromeCircuit circuit_from_offsets(int n, const std::vector<int>& values,
                                     Basis basis = Basis::x);

/// Random cat-state-style circuit with s ancillas on n data qubits.
SyndromeCircuit random_shor_style_circuit(Rng& rng, int s, int n);

/// Random row-per-check circuit: s rows, each a random nonempty subset of
/// the n data qubits.
SyndromeCircuit random_naive_style_circuit(Rng& rng, int s, int n);

/// Random matrix whose every column has weight exactly column_weight and
/// with no all-zero rows. Requires rows >= column_weight.
BitMatrix random_column_regular_matrix(Rng& rng, int rows, int cols,
                                       int column_weight);

/// Random yes-instance of 3-partition: m triples drawn inside the strict
/// window and summing to a common target. Returns the instance with its
/// planted triples (indices into the shuffled weight list).
struct PlantedPartition {
  hardness::ThreePartition instance;
  std::vector<hardness::Triple> triples;
};

PlantedPartition random_partition_instance(Rng& rng, int m);

}  // namespace shuttlec
