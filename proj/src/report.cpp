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

#include "shuttlec/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace shuttlec {

namespace {

BasisReport compile_one(const BitMatrix& checks, CircuitStyle style,
                        Basis basis) {
  const SyndromeCircuit circuit = style == CircuitStyle::naive
                                      ? naive_circuit(checks, basis)
                                      : shor_circuit(checks, basis);
  BasisReport report;
  report.basis = std::string(1, basis_letter(basis));
  report.s = circuit.s;
  report.result = compile_best(circuit);
  return report;
}

std::string best_cell(const CompileResult& r) {
  std::ostringstream cell;
  cell << r.best_pass << "(" << r.best_shuttles << ")";
  return cell.str();
}

}  // namespace

CodeReport compile_code_report(const CssCode& code, CircuitStyle style,
                               bool with_x, bool with_z) {
  CodeReport report;
  report.code = code.name;
  report.n = code.n;
  report.style = style;
  if (with_x) report.bases.push_back(compile_one(code.hx, style, Basis::x));
  if (with_z) report.bases.push_back(compile_one(code.hz, style, Basis::z));
  return report;
}

CodeReport compile_combined_report(const CssCode& code, CircuitStyle style) {
  const SyndromeCircuit circuit = style == CircuitStyle::naive
                                      ? naive_circuit(code)
                                      : shor_circuit(code);
  CodeReport report;
  report.code = code.name;
  report.n = code.n;
  report.style = style;
  BasisReport basis_report;
  basis_report.basis = "XZ";
  basis_report.s = circuit.s;
  basis_report.result = compile_best(circuit, /*allow_mixed=*/true);
  report.bases.push_back(std::move(basis_report));
  return report;
}

void write_report_table(std::ostream& out,
                        const std::vector<CodeReport>& reports) {
  std::size_t code_width = 4;
  std::size_t best_width = 4;
  for (const CodeReport& report : reports) {
    code_width = std::max(code_width, report.code.size());
    for (const BasisReport& basis : report.bases) {
      best_width = std::max(best_width, best_cell(basis.result).size());
    }
  }
  const auto line = [&](std::ostream& o) {
    o << std::left << std::setw(static_cast<int>(code_width) + 2);
  };
  line(out);
  out << "Code" << std::right << std::setw(6) << "N" << std::setw(7) << "Style"
      << std::setw(6) << "Basis" << std::setw(7) << "S" << std::setw(11)
      << "Uncompiled" << std::setw(9) << "Shuffled" << std::setw(5) << "AHR"
      << std::setw(6) << "SSSC" << std::setw(7) << "Chains" << std::setw(7)
      << "Blanks" << "  " << std::left
      << std::setw(static_cast<int>(best_width)) << "Best" << '\n';
  for (const CodeReport& report : reports) {
    for (const BasisReport& basis : report.bases) {
      const CompileResult& r = basis.result;
      line(out);
      out << report.code << std::right << std::setw(6) << report.n
          << std::setw(7) << style_name(report.style) << std::setw(6)
          << basis.basis << std::setw(7) << basis.s << std::setw(11)
          << r.uncompiled << std::setw(9) << r.gate_shuffled << std::setw(5)
          << r.ahr.shuttles() << std::setw(6);
      if (r.sssc) {
        out << r.sssc->shuttles();
      } else {
        out << "-";
      }
      out << std::setw(7) << r.num_chains << std::setw(7) << r.blanks.blanks
          << "  " << std::left << std::setw(static_cast<int>(best_width))
          << best_cell(r) << '\n';
    }
  }
}

void write_report_csv(std::ostream& out,
                      const std::vector<CodeReport>& reports) {
  out << "code,n,style,basis,s,uncompiled,gate_shuffled,ahr,sssc,num_chains,"
         "blanks,gap_runs,best_pass,best_shuttles\n";
  for (const CodeReport& report : reports) {
    for (const BasisReport& basis : report.bases) {
      const CompileResult& r = basis.result;
      out << report.code << ',' << report.n << ','
          << style_name(report.style) << ',' << basis.basis << ',' << basis.s
          << ',' << r.uncompiled << ',' << r.gate_shuffled << ','
          << r.ahr.shuttles() << ',';
      if (r.sssc) out << r.sssc->shuttles();
      out << ',' << r.num_chains << ',' << r.blanks.blanks << ','
          << r.blanks.gap_runs << ',' << r.best_pass << ','
          << r.best_shuttles << '\n';
    }
  }
}

nlohmann::json report_to_json(const std::vector<CodeReport>& reports) {
  nlohmann::json root = nlohmann::json::array();
  for (const CodeReport& report : reports) {
    nlohmann::json entry;
    entry["code"] = report.code;
    entry["n"] = report.n;
    entry["style"] = style_name(report.style);
    entry["bases"] = nlohmann::json::array();
    for (const BasisReport& basis : report.bases) {
      const CompileResult& r = basis.result;
      nlohmann::json b;
      b["basis"] = basis.basis;
      b["s"] = basis.s;
      b["uncompiled"] = r.uncompiled;
      b["gate_shuffled"] = r.gate_shuffled;
      b["ahr"] = {{"shuttles", r.ahr.shuttles()},
                  {"candidate", r.ahr.candidate},
                  {"reindexing", r.ahr.reindexing.slot_of}};
      if (r.sssc) {
        b["sssc"] = {{"shuttles", r.sssc->shuttles()},
                     {"reindexing", r.sssc->reindexing.slot_of}};
      } else {
        b["sssc"] = nullptr;
      }
      b["num_chains"] = r.num_chains;
      b["blanks"] = r.blanks.blanks;
      b["gap_runs"] = r.blanks.gap_runs;
      b["best_pass"] = r.best_pass;
      b["best_shuttles"] = r.best_shuttles;
      entry["bases"].push_back(std::move(b));
    }
    root.push_back(std::move(entry));
  }
  return root;
}

}  // namespace shuttlec
