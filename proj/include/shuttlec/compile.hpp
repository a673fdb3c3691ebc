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

#include <optional>
#include <string>

#include "shuttlec/ahr.hpp"
#include "shuttlec/circuits.hpp"
#include "shuttlec/sssc.hpp"

namespace shuttlec {

/// Every pass applied to one circuit, plus the winner. `sssc` is absent when
/// some ancilla carries more than one offset (ladder packing does not apply).
/// `num_chains` and `blanks` describe the chain decomposition of the offset
/// multiset: num_chains shuttles are reachable by adding `blanks` physical
/// blank sites, and num_chains also lower-bounds every bijective layout.
struct CompileResult {
  int uncompiled = 0;
  int gate_shuffled = 0;
  AhrResult ahr;
  std::optional<SsscResult> sssc;
  int num_chains = 0;
  BlanksResult blanks;
  std::string best_pass;
  int best_shuttles = 0;
};

/// Runs gate shuffling (identity layout), the three-candidate re-indexing,
/// and, when eligible, ladder packing; `best_pass` is the argmin, preferring
/// the stronger pass on ties (sssc, then ahr, then gate_shuffle).
CompileResult compile_best(const SyndromeCircuit& circuit,
                           bool allow_mixed = false);

}  // namespace shuttlec
