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

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "shuttlec/css_codes.hpp"

namespace shuttlec {

enum class Basis : std::uint8_t { x, z };

char basis_letter(Basis b);

/// Circuit style: one ancilla per check row, or one ancilla per check entry
/// (cat-state readout, every ancilla touches exactly one data qubit).
enum class CircuitStyle : std::uint8_t { naive, shor };

const char* style_name(CircuitStyle s);

/// One two-qubit gate between a data qubit (top row) and an ancilla (bottom
/// row). `check` records the originating parity-check row.
struct Gate {
  int data = 0;     // 1..n
  int ancilla = 0;  // 1..s, a fixed label for the ancilla qubit
  Basis basis = Basis::x;
  int check = 0;  // 1..rows of the source matrix

  bool operator==(const Gate&) const = default;
};

/// A syndrome-extraction round on the two-row array: n data qubits on the
/// fixed top row, s ancillas on the shuttling bottom row. `positions` maps
/// each ancilla label to its bottom-row slot (identity when freshly built);
/// re-indexing passes replace it and never rewrite the gates, so the
/// per-ancilla offset sets are layout-invariant by construction.
struct SyndromeCircuit {
  int n = 0;
  int s = 0;
  CircuitStyle style = CircuitStyle::naive;
  std::vector<Gate> gates;
  std::vector<int> positions;  // positions[i-1] = slot of ancilla i, 1..s
};

/// One ancilla per check row; gates enumerate the row's support left to
/// right, rows in order.
SyndromeCircuit naive_circuit(const BitMatrix& checks, Basis basis);

/// One ancilla per check-matrix entry, row-major; every ancilla participates
/// in exactly one gate.
SyndromeCircuit shor_circuit(const BitMatrix& checks, Basis basis);

/// Combined X+Z round for one code: X gates first, Z ancillas numbered after
/// the X ancillas. Compiling mixed bases in one round needs the explicit
/// pedagogical flag downstream.
SyndromeCircuit naive_circuit(const CssCode& code);
SyndromeCircuit shor_circuit(const CssCode& code);

/// Row offset at which a gate can execute: delta = (n - data) + slot.
/// Always in [1, n + s - 1].
int gate_delta(int n, int data, int slot);
int gate_delta(const SyndromeCircuit& circuit, const Gate& gate);

/// Per-ancilla data-offset sets P_i = { n - d : gates on ancilla i touch
/// data qubit d }, indexed by ancilla label, plus the current layout k_i.
/// Both are what the re-indexing passes work on: the sets never change under
/// a re-indexing, only the positions do.
struct PrimitiveSets {
  std::vector<std::vector<int>> sets;  // sets[i-1], ascending, deduplicated
  std::vector<int> positions;          // positions[i-1] = slot of ancilla i
};

PrimitiveSets primitive_sets(const SyndromeCircuit& circuit);

/// Shuttles consumed by running the gates in their stored order under the
/// current layout: 1 + (number of adjacent gate pairs whose deltas differ),
/// or 0 for an empty circuit.
int uncompiled_shuttles(const SyndromeCircuit& circuit);

/// Distinct deltas over all gates when ancilla i sits at slot_of[i-1];
/// equals the shuttle count of the grouped schedule for that layout.
int distinct_deltas(const PrimitiveSets& sets, const std::vector<int>& slot_of);

/// True when every ancilla touches exactly one distinct data qubit (the
/// precondition for ladder-packing compilation).
bool all_singleton(const PrimitiveSets& sets);

/// Header "n s style", then one line per gate: "<data> <ancilla> <basis>
/// <check>". read_circuit accepts '#' comments and blank lines and validates
/// every field range.
void write_circuit(std::ostream& out, const SyndromeCircuit& circuit);
SyndromeCircuit read_circuit(std::istream& in);

}  // namespace shuttlec
