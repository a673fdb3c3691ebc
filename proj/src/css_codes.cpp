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

#include "shuttlec/css_codes.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace shuttlec {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw std::invalid_argument(what);
}

void check_no_zero_rows(const BitMatrix& m, const std::string& name,
                        const char* sector) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.row_weight(r) == 0) {
      std::ostringstream msg;
      msg << name << ": " << sector << " row " << (r + 1) << " is all zero";
      invalid(msg.str());
    }
  }
}

}  // namespace

CssCode make_css_code(std::string name, BitMatrix hx, BitMatrix hz) {
  if (hx.cols() != hz.cols()) {
    std::ostringstream msg;
    msg << name << ": X checks act on " << hx.cols()
        << " qubits but Z checks act on " << hz.cols();
    invalid(msg.str());
  }
  if (hx.cols() == 0) invalid(name + ": code has no data qubits");
  check_no_zero_rows(hx, name, "X");
  check_no_zero_rows(hz, name, "Z");
  for (std::size_t r = 0; r < hx.rows(); ++r) {
    for (std::size_t s = 0; s < hz.rows(); ++s) {
      if (hx.row_dot(r, hz, s)) {
        std::ostringstream msg;
        msg << name << ": X row " << (r + 1) << " anticommutes with Z row "
            << (s + 1);
        invalid(msg.str());
      }
    }
  }
  CssCode code;
  code.name = std::move(name);
  code.n = hx.cols();
  code.hx = std::move(hx);
  code.hz = std::move(hz);
  return code;
}

CssCode steane() {
  const std::vector<std::vector<int>> checks = {
      {4, 5, 6, 7}, {2, 3, 6, 7}, {1, 3, 5, 7}};
  return make_css_code("steane", BitMatrix::from_rows(7, checks),
                       BitMatrix::from_rows(7, checks));
}

CssCode shor9() {
  const std::vector<std::vector<int>> x_checks = {{1, 2, 3, 4, 5, 6},
                                                  {4, 5, 6, 7, 8, 9}};
  const std::vector<std::vector<int>> z_checks = {
      {1, 2}, {2, 3}, {4, 5}, {5, 6}, {7, 8}, {8, 9}};
  return make_css_code("shor9", BitMatrix::from_rows(9, x_checks),
                       BitMatrix::from_rows(9, z_checks));
}

CssCode toric2d(std::size_t l) {
  if (l < 2) invalid("toric2d: lattice size must be at least 2");
  const std::size_t n = 2 * l * l;
  // Edge layout: horizontal edge (r,c) at index r*l + c, vertical edge (r,c)
  // at index l*l + r*l + c, all 0-based with periodic wraparound.
  const auto h_edge = [l](std::size_t r, std::size_t c) {
    return (r % l) * l + (c % l);
  };
  const auto v_edge = [l](std::size_t r, std::size_t c) {
    return l * l + (r % l) * l + (c % l);
  };
  // The product of all checks in a sector is the identity, so the last check
  // of each sector is dropped.
  BitMatrix hx(l * l - 1, n);
  BitMatrix hz(l * l - 1, n);
  std::size_t row = 0;
  for (std::size_t r = 0; r < l && row < hx.rows(); ++r) {
    for (std::size_t c = 0; c < l && row < hx.rows(); ++c, ++row) {
      hx.set(row, h_edge(r, c), true);
      hx.set(row, h_edge(r, c + l - 1), true);
      hx.set(row, v_edge(r, c), true);
      hx.set(row, v_edge(r + l - 1, c), true);
    }
  }
  row = 0;
  for (std::size_t r = 0; r < l && row < hz.rows(); ++r) {
    for (std::size_t c = 0; c < l && row < hz.rows(); ++c, ++row) {
      hz.set(row, h_edge(r, c), true);
      hz.set(row, h_edge(r + 1, c), true);
      hz.set(row, v_edge(r, c), true);
      hz.set(row, v_edge(r, c + 1), true);
    }
  }
  std::ostringstream name;
  name << "toric:" << l;
  return make_css_code(name.str(), std::move(hx), std::move(hz));
}

CssCode surface2d(std::size_t l) {
  if (l < 2) invalid("surface2d: lattice size must be at least 2");
  // H is the (l-1) x l boundary matrix of the length-l repetition code.
  BitMatrix h(l - 1, l);
  for (std::size_t r = 0; r < l - 1; ++r) {
    h.set(r, r, true);
    h.set(r, r + 1, true);
  }
  const BitMatrix ht = h.transposed();
  BitMatrix hx = BitMatrix::hconcat(BitMatrix::kron(h, BitMatrix::identity(l)),
                                    BitMatrix::kron(BitMatrix::identity(l - 1), ht));
  BitMatrix hz = BitMatrix::hconcat(BitMatrix::kron(BitMatrix::identity(l), h),
                                    BitMatrix::kron(ht, BitMatrix::identity(l - 1)));
  std::ostringstream name;
  name << "surface:" << l;
  return make_css_code(name.str(), std::move(hx), std::move(hz));
}

namespace {

// Sum of monomial shift matrices on the group algebra of Z_l x Z_m.
BitMatrix bivariate_polynomial(std::size_t l, std::size_t m,
                               const std::vector<Monomial>& terms) {
  if (terms.empty()) invalid("bivariate polynomial has no terms");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Monomial& t : terms) {
    if (t.x >= l || t.y >= m) {
      invalid("monomial exponent out of range for the group size");
    }
    if (!seen.insert({t.x, t.y}).second) {
      invalid("duplicate monomial in polynomial");
    }
  }
  const std::size_t dim = l * m;
  BitMatrix p(dim, dim);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (const Monomial& t : terms) {
        p.set(i * m + j, ((i + t.x) % l) * m + ((j + t.y) % m), true);
      }
    }
  }
  return p;
}

BitMatrix circulant(std::size_t l, const std::vector<std::size_t>& exponents) {
  if (exponents.empty()) invalid("circulant polynomial has no terms");
  std::set<std::size_t> seen;
  for (std::size_t e : exponents) {
    if (e >= l) invalid("circulant exponent out of range");
    if (!seen.insert(e).second) invalid("duplicate circulant exponent");
  }
  BitMatrix p(l, l);
  for (std::size_t r = 0; r < l; ++r) {
    for (std::size_t e : exponents) p.set(r, (r + e) % l, true);
  }
  return p;
}

CssCode two_block_code(std::string name, const BitMatrix& a,
                       const BitMatrix& b) {
  BitMatrix hx = BitMatrix::hconcat(a, b);
  BitMatrix hz = BitMatrix::hconcat(b.transposed(), a.transposed());
  return make_css_code(std::move(name), std::move(hx), std::move(hz));
}

}  // namespace

CssCode bivariate_bicycle(std::size_t l, std::size_t m,
                          const std::vector<Monomial>& a,
                          const std::vector<Monomial>& b, std::string name) {
  if (l == 0 || m == 0) invalid("bivariate_bicycle: group sizes must be positive");
  if (name.empty()) {
    std::ostringstream n;
    n << "bb:" << l << "," << m;
    name = n.str();
  }
  return two_block_code(std::move(name), bivariate_polynomial(l, m, a),
                        bivariate_polynomial(l, m, b));
}

CssCode generalized_bicycle(std::size_t l,
                            const std::vector<std::size_t>& a_exponents,
                            const std::vector<std::size_t>& b_exponents,
                            std::string name) {
  if (l == 0) invalid("generalized_bicycle: circulant size must be positive");
  if (name.empty()) {
    std::ostringstream n;
    n << "gb:" << l;
    name = n.str();
  }
  return two_block_code(std::move(name), circulant(l, a_exponents),
                        circulant(l, b_exponents));
}

CssCode qcghp882() {
  constexpr std::size_t kLift = 63;
  constexpr std::size_t kGrid = 7;
  // First row of the 7x7 quasi-cyclic exponent grid; row r is the cyclic
  // right-shift of row r-1, so entry (r,c) holds exponent kExp[(c-r) mod 7].
  constexpr std::size_t kExp[kGrid] = {56, 12, 52, 13, 39, 11, 61};
  BitMatrix a(kGrid * kLift, kGrid * kLift);
  for (std::size_t br = 0; br < kGrid; ++br) {
    for (std::size_t bc = 0; bc < kGrid; ++bc) {
      const std::size_t e = kExp[(bc + kGrid - br) % kGrid];
      for (std::size_t i = 0; i < kLift; ++i) {
        a.set(br * kLift + i, bc * kLift + (i + e) % kLift, true);
      }
    }
  }
  // B is b(x) = 1 + x + x^6 repeated on the block diagonal; being a scalar of
  // the ring it commutes with A, which gives hx * hz^T = 0.
  const BitMatrix b_block = circulant(kLift, {0, 1, 6});
  BitMatrix b(kGrid * kLift, kGrid * kLift);
  for (std::size_t blk = 0; blk < kGrid; ++blk) {
    for (std::size_t i = 0; i < kLift; ++i) {
      for (std::size_t j = 0; j < kLift; ++j) {
        if (b_block.get(i, j)) b.set(blk * kLift + i, blk * kLift + j, true);
      }
    }
  }
  return two_block_code("qcghp882", a, b);
}

namespace {

// Reads a section header line ("X" or "Z"), skipping blanks and comments.
bool read_section_header(std::istream& in, char& sector) {
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    const std::size_t end = line.find_last_not_of(" \t\r");
    if (end != start) {
      throw std::runtime_error("expected section header \"X\" or \"Z\", got \"" +
                               line.substr(start, end - start + 1) + "\"");
    }
    if (line[start] != 'X' && line[start] != 'Z') {
      throw std::runtime_error(std::string("unknown section header \"") +
                               line[start] + "\"");
    }
    sector = line[start];
    return true;
  }
  return false;
}

}  // namespace

CssCode read_css(std::istream& in, std::string name) {
  BitMatrix hx;
  BitMatrix hz;
  bool have_x = false;
  bool have_z = false;
  char sector = 0;
  while (read_section_header(in, sector)) {
    if (sector == 'X') {
      if (have_x) throw std::runtime_error("duplicate X section");
      hx = read_matrix(in);
      have_x = true;
    } else {
      if (have_z) throw std::runtime_error("duplicate Z section");
      hz = read_matrix(in);
      have_z = true;
    }
  }
  if (!have_x || !have_z) {
    throw std::runtime_error("combined file needs both X and Z sections");
  }
  return make_css_code(std::move(name), std::move(hx), std::move(hz));
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
  return in;
}

}  // namespace

CssCode load_css(const std::string& path, std::string name) {
  std::ifstream in = open_or_throw(path);
  return read_css(in, std::move(name));
}

CssCode load_css(const std::string& hx_path, const std::string& hz_path,
                 std::string name) {
  std::ifstream in_x = open_or_throw(hx_path);
  std::ifstream in_z = open_or_throw(hz_path);
  return make_css_code(std::move(name), read_matrix(in_x), read_matrix(in_z));
}

void write_css(std::ostream& out, const CssCode& code) {
  out << "X\n";
  write_matrix(out, code.hx);
  out << "Z\n";
  write_matrix(out, code.hz);
}

}  // namespace shuttlec
