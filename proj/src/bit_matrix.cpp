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

#include "shuttlec/bit_matrix.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace shuttlec {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error(what);
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      words_per_row_(cols == 0 ? 0 : (cols + 63) / 64),
      words_(rows * words_per_row_, 0) {}

BitMatrix BitMatrix::from_rows(std::size_t cols,
                               const std::vector<std::vector<int>>& supports) {
  BitMatrix m(supports.size(), cols);
  for (std::size_t r = 0; r < supports.size(); ++r) {
    for (int c : supports[r]) {
      if (c < 1 || static_cast<std::size_t>(c) > cols) {
        std::ostringstream msg;
        msg << "support entry " << c << " in row " << (r + 1)
            << " is outside 1.." << cols;
        throw std::invalid_argument(msg.str());
      }
      m.set(r, static_cast<std::size_t>(c - 1), true);
    }
  }
  return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix::get");
  return (words_[r * words_per_row_ + c / 64] >> (c % 64)) & 1ULL;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix::set");
  std::uint64_t& word = words_[r * words_per_row_ + c / 64];
  const std::uint64_t mask = 1ULL << (c % 64);
  if (value) {
    word |= mask;
  } else {
    word &= ~mask;
  }
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("BitMatrix::row_weight");
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_per_row_; ++w) {
    total += static_cast<std::size_t>(
        std::popcount(words_[r * words_per_row_ + w]));
  }
  return total;
}

std::size_t BitMatrix::column_weight(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("BitMatrix::column_weight");
  std::size_t total = 0;
  for (std::size_t r = 0; r < rows_; ++r) total += get(r, c) ? 1 : 0;
  return total;
}

std::size_t BitMatrix::popcount() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

bool BitMatrix::row_dot(std::size_t r, const BitMatrix& other,
                        std::size_t s) const {
  if (cols_ != other.cols_) {
    throw std::invalid_argument("row_dot: column counts differ");
  }
  if (r >= rows_ || s >= other.rows_) throw std::out_of_range("row_dot");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_per_row_; ++w) {
    acc ^= words_[r * words_per_row_ + w] &
           other.words_[s * other.words_per_row_ + w];
  }
  return std::popcount(acc) % 2 != 0;
}

void BitMatrix::xor_row(std::size_t dst, const BitMatrix& other,
                        std::size_t src) {
  if (cols_ != other.cols_) {
    throw std::invalid_argument("xor_row: column counts differ");
  }
  if (dst >= rows_ || src >= other.rows_) throw std::out_of_range("xor_row");
  for (std::size_t w = 0; w < words_per_row_; ++w) {
    words_[dst * words_per_row_ + w] ^=
        other.words_[src * other.words_per_row_ + w];
  }
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

BitMatrix BitMatrix::hconcat(const BitMatrix& left, const BitMatrix& right) {
  if (left.rows() != right.rows()) {
    throw std::invalid_argument("hconcat: row counts differ");
  }
  BitMatrix m(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) {
      if (left.get(r, c)) m.set(r, c, true);
    }
    for (std::size_t c = 0; c < right.cols(); ++c) {
      if (right.get(r, c)) m.set(r, left.cols() + c, true);
    }
  }
  return m;
}

BitMatrix BitMatrix::kron(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      if (!a.get(ar, ac)) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          if (b.get(br, bc)) {
            m.set(ar * b.rows() + br, ac * b.cols() + bc, true);
          }
        }
      }
    }
  }
  return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

std::size_t gf2_rank(BitMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      // Swap by XOR; rows differ at column c so three XORs swap them.
      m.xor_row(rank, m, pivot);
      m.xor_row(pivot, m, rank);
      m.xor_row(rank, m, pivot);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != rank && m.get(r, c)) m.xor_row(r, m, rank);
    }
    ++rank;
  }
  return rank;
}

void write_matrix(std::ostream& out, const BitMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) out << ' ';
      out << (m.get(r, c) ? '1' : '0');
    }
    out << '\n';
  }
}

namespace {

// Returns the next content line, skipping blanks and '#' comments.
// line_no tracks the physical line for error messages.
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

}  // namespace

BitMatrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) {
    fail("matrix input is empty");
  }
  std::istringstream header(line);
  long long rows = -1;
  long long cols = -1;
  if (!(header >> rows >> cols) || rows < 0 || cols < 0) {
    fail("line " + std::to_string(line_no) +
         ": expected header \"<rows> <cols>\"");
  }
  std::string trailing;
  if (header >> trailing) {
    fail("line " + std::to_string(line_no) + ": trailing data after header");
  }
  BitMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long long r = 0; r < rows; ++r) {
    if (!next_content_line(in, line, line_no)) {
      fail("matrix row " + std::to_string(r + 1) + " is missing");
    }
    std::istringstream row(line);
    std::string token;
    for (long long c = 0; c < cols; ++c) {
      if (!(row >> token)) {
        fail("line " + std::to_string(line_no) + ": row " +
             std::to_string(r + 1) + " has fewer than " +
             std::to_string(cols) + " entries");
      }
      if (token == "1") {
        m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), true);
      } else if (token != "0") {
        fail("line " + std::to_string(line_no) + ": entry \"" + token +
             "\" is not 0 or 1");
      }
    }
    if (row >> token) {
      fail("line " + std::to_string(line_no) + ": row " +
           std::to_string(r + 1) + " has more than " + std::to_string(cols) +
           " entries");
    }
  }
  return m;
}

}  // namespace shuttlec
