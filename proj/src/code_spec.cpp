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

#include "shuttlec/code_spec.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace shuttlec {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw std::invalid_argument(what);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    if (at == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, at - start));
    start = at + 1;
  }
}

std::size_t parse_size(const std::string& token, const std::string& context) {
  if (token.empty()) invalid(context + ": empty number");
  std::size_t consumed = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(token, &consumed);
  } catch (const std::exception&) {
    invalid(context + ": \"" + token + "\" is not a number");
  }
  if (consumed != token.size()) {
    invalid(context + ": \"" + token + "\" is not a number");
  }
  return static_cast<std::size_t>(value);
}

// Monomial spellings: "1", "x3", "y2", "x3y2".
Monomial parse_monomial(const std::string& token) {
  if (token == "1") return Monomial{0, 0};
  Monomial m;
  std::size_t at = 0;
  bool any = false;
  for (const char axis : {'x', 'y'}) {
    if (at < token.size() && token[at] == axis) {
      ++at;
      const std::size_t start = at;
      while (at < token.size() && std::isdigit(static_cast<unsigned char>(token[at]))) {
        ++at;
      }
      if (start == at) invalid("monomial \"" + token + "\" lacks an exponent");
      const std::size_t e = parse_size(token.substr(start, at - start), "monomial");
      if (axis == 'x') {
        m.x = e;
      } else {
        m.y = e;
      }
      any = true;
    }
  }
  if (!any || at != token.size()) {
    invalid("cannot parse monomial \"" + token + "\" (use 1, x3, y2, x3y2)");
  }
  return m;
}

std::vector<Monomial> parse_polynomial(const std::string& text) {
  std::vector<Monomial> terms;
  for (const std::string& token : split(text, ',')) {
    terms.push_back(parse_monomial(token));
  }
  return terms;
}

std::vector<std::size_t> parse_exponents(const std::string& text) {
  std::vector<std::size_t> exponents;
  for (const std::string& token : split(text, ',')) {
    exponents.push_back(parse_size(token, "exponent list"));
  }
  return exponents;
}

}  // namespace

CssCode code_from_spec(const std::string& spec) {
  if (spec == "steane") return steane();
  if (spec == "shor9") return shor9();
  if (spec == "qcghp882") return qcghp882();

  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) {
    invalid("unknown code \"" + spec +
            "\" (try steane, shor9, qcghp882, toric:L, surface:L, "
            "bb:l,m:A:B, gb:l:a:b, or file:path)");
  }
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);

  if (kind == "toric") return toric2d(parse_size(rest, "toric size"));
  if (kind == "surface") return surface2d(parse_size(rest, "surface size"));

  if (kind == "bb") {
    const std::vector<std::string> parts = split(rest, ':');
    if (parts.size() != 3) invalid("bb target needs bb:<l>,<m>:<A>:<B>");
    const std::vector<std::string> dims = split(parts[0], ',');
    if (dims.size() != 2) invalid("bb dimensions need the form <l>,<m>");
    return bivariate_bicycle(parse_size(dims[0], "bb l"),
                             parse_size(dims[1], "bb m"),
                             parse_polynomial(parts[1]),
                             parse_polynomial(parts[2]), spec);
  }
  if (kind == "gb") {
    const std::vector<std::string> parts = split(rest, ':');
    if (parts.size() != 3) invalid("gb target needs gb:<l>:<a>:<b>");
    return generalized_bicycle(parse_size(parts[0], "gb l"),
                               parse_exponents(parts[1]),
                               parse_exponents(parts[2]), spec);
  }
  if (kind == "file") {
    const std::vector<std::string> paths = split(rest, ',');
    if (paths.size() == 1) return load_css(paths[0], spec);
    if (paths.size() == 2) return load_css(paths[0], paths[1], spec);
    invalid("file target needs file:<path> or file:<hx>,<hz>");
  }
  invalid("unknown code kind \"" + kind + "\"");
}

}  // namespace shuttlec
