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
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace shuttlec {

/// Dense matrix over GF(2), rows bit-packed into 64-bit words.
///
/// Padding bits past the last column of each row are kept zero, so whole-word
/// operations (row dot products, equality) need no masking.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  /// Builds a matrix from 1-based column supports, one vector per row.
  static BitMatrix from_rows(std::size_t cols,
                             const std::vector<std::vector<int>>& supports);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);

  std::size_t row_weight(std::size_t r) const;
  std::size_t column_weight(std::size_t c) const;
  std::size_t popcount() const;

  /// Parity of the dot product of row r with row s of `other`.
  /// Requires matching column counts.
  bool row_dot(std::size_t r, const BitMatrix& other, std::size_t s) const;

  /// XORs row `src` of `other` into row `dst` of this matrix.
  void xor_row(std::size_t dst, const BitMatrix& other, std::size_t src);

  BitMatrix transposed() const;

  /// [left | right]; requires equal row counts.
  static BitMatrix hconcat(const BitMatrix& left, const BitMatrix& right);

  /// Kronecker product over GF(2).
  static BitMatrix kron(const BitMatrix& a, const BitMatrix& b);

  static BitMatrix identity(std::size_t n);

  bool operator==(const BitMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

/// GF(2) rank by Gaussian elimination (the input is copied).
std::size_t gf2_rank(BitMatrix m);

/// Writes "<rows> <cols>" followed by one line of 0/1 tokens per row.
void write_matrix(std::ostream& out, const BitMatrix& m);

/// Parses the write_matrix format. Blank lines and lines starting with '#'
/// are skipped. Throws std::runtime_error with a line reference on any
/// malformed input.
BitMatrix read_matrix(std::istream& in);

}  // namespace shuttlec
