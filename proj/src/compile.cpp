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

#include "shuttlec/compile.hpp"

#include "shuttlec/chains.hpp"

namespace shuttlec {

CompileResult compile_best(const SyndromeCircuit& circuit, bool allow_mixed) {
  CompileResult result;
  result.uncompiled = uncompiled_shuttles(circuit);
  result.gate_shuffled = gate_shuffle(circuit, allow_mixed).shuttles();
  result.ahr = ahr(circuit, allow_mixed);

  // The offset multiset over gates equals the data-qubit column multiset, so
  // the chain decomposition below matches what ladder packing consumes.
  std::vector<int> offsets;
  offsets.reserve(circuit.gates.size());
  for (const Gate& gate : circuit.gates) {
    offsets.push_back(circuit.n - gate.data);
  }
  const ChainSet chains = make_chains(offsets);
  result.num_chains = static_cast<int>(chains.size());
  result.blanks = blanks_compile(chains);

  const PrimitiveSets sets = primitive_sets(circuit);
  if (all_singleton(sets)) {
    result.sssc = sssc(circuit, allow_mixed);
  }

  // Argmin over the passes, strongest first so it wins ties.
  struct Candidate {
    const char* name;
    int count;
    bool available;
  };
  const Candidate candidates[] = {
      {"sssc", result.sssc ? result.sssc->shuttles() : 0,
       result.sssc.has_value()},
      {"ahr", result.ahr.shuttles(), true},
      {"gate_shuffle", result.gate_shuffled, true},
  };
  for (const Candidate& candidate : candidates) {
    if (!candidate.available) continue;
    if (result.best_pass.empty() || candidate.count < result.best_shuttles) {
      result.best_pass = candidate.name;
      result.best_shuttles = candidate.count;
    }
  }
  return result;
}

}  // namespace shuttlec
