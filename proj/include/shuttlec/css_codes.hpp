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

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "shuttlec/bit_matrix.hpp"

namespace shuttlec {

/// A CSS stabilizer code given by its X and Z parity-check matrices.
/// Invariants (enforced by make_css_code): equal column counts, no all-zero
/// rows, and hx * hz^T = 0 over GF(2).
struct CssCode {
  std::string name;
  std::size_t n = 0;  // data qubit count == column count of both matrices
  BitMatrix hx;
  BitMatrix hz;
};

/// Validates and assembles a CssCode. Throws std::invalid_argument naming the
/// offending row (or row pair, for an orthogonality failure).
CssCode make_css_code(std::string name, BitMatrix hx, BitMatrix hz);

/// [[7,1,3]] self-dual code; both matrices are the Hamming(7,4) checks.
CssCode steane();

/// [[9,1,3]] code; two weight-6 X checks, six weight-2 Z checks.
CssCode shor9();

/// Torus code on an L x L square lattice with periodic boundaries
/// (n = 2*L^2). One dependent check per sector is dropped, so each matrix has
/// L^2 - 1 rows. Requires L >= 2.
CssCode toric2d(std::size_t l);

/// Hypergraph product of the length-L repetition code with itself
/// (n = L^2 + (L-1)^2, the planar patch layout). Requires L >= 2.
CssCode surface2d(std::size_t l);

/// Monomial x^x_exp * y^y_exp in GF(2)[x,y]/(x^l-1, y^m-1).
struct Monomial {
  std::size_t x = 0;
  std::size_t y = 0;
};

/// Bivariate bicycle code: hx = [A|B], hz = [B^T|A^T] where A and B are sums
/// of the given monomials acting on the l*m group algebra (n = 2*l*m).
/// Monomials within a polynomial must be distinct.
CssCode bivariate_bicycle(std::size_t l, std::size_t m,
                          const std::vector<Monomial>& a,
                          const std::vector<Monomial>& b,
                          std::string name = "");

/// Generalized bicycle code from two univariate circulants of size l:
/// hx = [A|B], hz = [B^T|A^T], n = 2*l. Exponents within a polynomial must be
/// distinct and < l.
CssCode generalized_bicycle(std::size_t l,
                            const std::vector<std::size_t>& a_exponents,
                            const std::vector<std::size_t>& b_exponents,
                            std::string name = "");

/// [[882,12]] quasi-cyclic lifted-product code: a 7x7 grid of 63x63 circulant
/// monomial blocks paired with b(x) = 1 + x + x^6 on the diagonal.
CssCode qcghp882();

/// Reads one combined file with "X" and "Z" section header lines, each
/// followed by a matrix in the read_matrix format.
CssCode read_css(std::istream& in, std::string name);

/// Loads a code from one combined file (X/Z sections) or from two matrix
/// files (hx then hz).
CssCode load_css(const std::string& path, std::string name);
CssCode load_css(const std::string& hx_path, const std::string& hz_path,
                 std::string name);

/// Writes the combined X/Z section format accepted by read_css.
void write_css(std::ostream& out, const CssCode& code);

}  // namespace shuttlec
