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

#include "shuttlec/circuits.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace shuttlec {

char basis_letter(Basis b) { return b == Basis::x ? 'X' : 'Z'; }

const char* style_name(CircuitStyle s) {
  return s == CircuitStyle::naive ? "naive" : "shor";
}

namespace {

std::vector<int> identity_positions(int s) {
  std::vector<int> positions(static_cast<std::size_t>(s));
  std::iota(positions.begin(), positions.end(), 1);
  return positions;
}

void append_naive_gates(SyndromeCircuit& circuit, const BitMatrix& checks,
                        Basis basis, int ancilla_offset) {
  for (std::size_t r = 0; r < checks.rows(); ++r) {
    for (std::size_t c = 0; c < checks.cols(); ++c) {
      if (!checks.get(r, c)) continue;
      circuit.gates.push_back(Gate{static_cast<int>(c + 1),
                                   ancilla_offset + static_cast<int>(r + 1),
                                   basis, static_cast<int>(r + 1)});
    }
  }
}

void append_shor_gates(SyndromeCircuit& circuit, const BitMatrix& checks,
                       Basis basis, int& next_ancilla) {
  for (std::size_t r = 0; r < checks.rows(); ++r) {
    for (std::size_t c = 0; c < checks.cols(); ++c) {
      if (!checks.get(r, c)) continue;
      circuit.gates.push_back(Gate{static_cast<int>(c + 1), next_ancilla++,
                                   basis, static_cast<int>(r + 1)});
    }
  }
}

}  // namespace

SyndromeCircuit naive_circuit(const BitMatrix& checks, Basis basis) {
  SyndromeCircuit circuit;
  circuit.n = static_cast<int>(checks.cols());
  circuit.s = static_cast<int>(checks.rows());
  circuit.style = CircuitStyle::naive;
  append_naive_gates(circuit, checks, basis, 0);
  circuit.positions = identity_positions(circuit.s);
  return circuit;
}

SyndromeCircuit shor_circuit(const BitMatrix& checks, Basis basis) {
  SyndromeCircuit circuit;
  circuit.n = static_cast<int>(checks.cols());
  circuit.s = static_cast<int>(checks.popcount());
  circuit.style = CircuitStyle::shor;
  int next_ancilla = 1;
  append_shor_gates(circuit, checks, basis, next_ancilla);
  circuit.positions = identity_positions(circuit.s);
  return circuit;
}

SyndromeCircuit naive_circuit(const CssCode& code) {
  SyndromeCircuit circuit;
  circuit.n = static_cast<int>(code.n);
  circuit.s = static_cast<int>(code.hx.rows() + code.hz.rows());
  circuit.style = CircuitStyle::naive;
  append_naive_gates(circuit, code.hx, Basis::x, 0);
  append_naive_gates(circuit, code.hz, Basis::z,
                     static_cast<int>(code.hx.rows()));
  circuit.positions = identity_positions(circuit.s);
  return circuit;
}

SyndromeCircuit shor_circuit(const CssCode& code) {
  SyndromeCircuit circuit;
  circuit.n = static_cast<int>(code.n);
  circuit.s = static_cast<int>(code.hx.popcount() + code.hz.popcount());
  circuit.style = CircuitStyle::shor;
  int next_ancilla = 1;
  append_shor_gates(circuit, code.hx, Basis::x, next_ancilla);
  append_shor_gates(circuit, code.hz, Basis::z, next_ancilla);
  circuit.positions = identity_positions(circuit.s);
  return circuit;
}

int gate_delta(int n, int data, int slot) {
  if (data < 1 || data > n) throw std::invalid_argument("data qubit out of range");
  return (n - data) + slot;
}

int gate_delta(const SyndromeCircuit& circuit, const Gate& gate) {
  if (gate.ancilla < 1 || gate.ancilla > circuit.s) {
    throw std::invalid_argument("ancilla label out of range");
  }
  return gate_delta(circuit.n, gate.data,
                    circuit.positions[static_cast<std::size_t>(gate.ancilla - 1)]);
}

PrimitiveSets primitive_sets(const SyndromeCircuit& circuit) {
  PrimitiveSets result;
  result.sets.resize(static_cast<std::size_t>(circuit.s));
  for (const Gate& gate : circuit.gates) {
    result.sets[static_cast<std::size_t>(gate.ancilla - 1)].push_back(
        circuit.n - gate.data);
  }
  for (std::vector<int>& set : result.sets) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
  result.positions = circuit.positions;
  return result;
}

int uncompiled_shuttles(const SyndromeCircuit& circuit) {
  if (circuit.gates.empty()) return 0;
  int shuttles = 1;
  int previous = gate_delta(circuit, circuit.gates.front());
  for (std::size_t i = 1; i < circuit.gates.size(); ++i) {
    const int current = gate_delta(circuit, circuit.gates[i]);
    if (current != previous) ++shuttles;
    previous = current;
  }
  return shuttles;
}

int distinct_deltas(const PrimitiveSets& sets, const std::vector<int>& slot_of) {
  if (slot_of.size() != sets.sets.size()) {
    throw std::invalid_argument("layout size does not match ancilla count");
  }
  std::unordered_set<int> deltas;
  for (std::size_t i = 0; i < sets.sets.size(); ++i) {
    for (int p : sets.sets[i]) deltas.insert(p + slot_of[i]);
  }
  return static_cast<int>(deltas.size());
}

bool all_singleton(const PrimitiveSets& sets) {
  return std::all_of(sets.sets.begin(), sets.sets.end(),
                     [](const std::vector<int>& set) { return set.size() == 1; });
}

void write_circuit(std::ostream& out, const SyndromeCircuit& circuit) {
  out << circuit.n << ' ' << circuit.s << ' ' << style_name(circuit.style)
      << '\n';
  for (const Gate& gate : circuit.gates) {
    out << gate.data << ' ' << gate.ancilla << ' ' << basis_letter(gate.basis)
        << ' ' << gate.check << '\n';
  }
}

namespace {

bool next_content_line(std::istream& in, std::string& line,
                       std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

SyndromeCircuit read_circuit(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) {
    throw std::runtime_error("circuit input is empty");
  }
  std::istringstream header(line);
  SyndromeCircuit circuit;
  std::string style;
  if (!(header >> circuit.n >> circuit.s >> style) || circuit.n < 1 ||
      circuit.s < 0) {
    bad_line(line_no, "expected header \"<n> <s> <style>\"");
  }
  if (style == "naive") {
    circuit.style = CircuitStyle::naive;
  } else if (style == "shor") {
    circuit.style = CircuitStyle::shor;
  } else {
    bad_line(line_no, "unknown style \"" + style + "\"");
  }
  while (next_content_line(in, line, line_no)) {
    std::istringstream entry(line);
    Gate gate;
    std::string basis;
    if (!(entry >> gate.data >> gate.ancilla >> basis >> gate.check)) {
      bad_line(line_no, "expected \"<data> <ancilla> <basis> <check>\"");
    }
    std::string trailing;
    if (entry >> trailing) bad_line(line_no, "trailing data after gate");
    if (gate.data < 1 || gate.data > circuit.n) {
      bad_line(line_no, "data qubit out of range");
    }
    if (gate.ancilla < 1 || gate.ancilla > circuit.s) {
      bad_line(line_no, "ancilla label out of range");
    }
    if (gate.check < 1) bad_line(line_no, "check index out of range");
    if (basis == "X") {
      gate.basis = Basis::x;
    } else if (basis == "Z") {
      gate.basis = Basis::z;
    } else {
      bad_line(line_no, "unknown basis \"" + basis + "\"");
    }
    circuit.gates.push_back(gate);
  }
  if (circuit.style == CircuitStyle::shor) {
    std::unordered_set<int> seen;
    for (const Gate& gate : circuit.gates) {
      if (!seen.insert(gate.ancilla).second) {
        throw std::runtime_error("ancilla " + std::to_string(gate.ancilla) +
                                 " appears in more than one gate");
      }
    }
  }
  circuit.positions = identity_positions(circuit.s);
  return circuit;
}

}  // namespace shuttlec
