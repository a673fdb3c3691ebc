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

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "shuttlec/compile.hpp"
#include "shuttlec/css_codes.hpp"

namespace shuttlec {

/// Compilation outcome for one circuit (one basis, or "XZ" for the combined
/// pedagogical round). `ahr` inside the result is the raw three-candidate
/// value, reported as-is next to the argmin so the two are never conflated.
struct BasisReport {
  std::string basis;  // "X", "Z", or "XZ"
  int s = 0;
  CompileResult result;
};

struct CodeReport {
  std::string code;
  std::size_t n = 0;
  CircuitStyle style = CircuitStyle::shor;
  std::vector<BasisReport> bases;
};

/// Compiles the selected bases of a code, each as its own circuit.
CodeReport compile_code_report(const CssCode& code, CircuitStyle style,
                               bool with_x, bool with_z);

/// Compiles one combined X+Z round (pedagogical; needs no basis selection).
CodeReport compile_combined_report(const CssCode& code, CircuitStyle style);

/// The three output forms carry identical numeric content.
void write_report_table(std::ostream& out,
                        const std::vector<CodeReport>& reports);
void write_report_csv(std::ostream& out,
                      const std::vector<CodeReport>& reports);
nlohmann::json report_to_json(const std::vector<CodeReport>& reports);

}  // namespace shuttlec
