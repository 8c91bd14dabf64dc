// Copyright 2026 The rankbreak Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense bit-packed matrices over F_2 and homogeneous F_2 linear systems.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rankbreak/field.hpp"
#include "rankbreak/rng.hpp"

namespace rankbreak {

/// Row-major F_2 matrix, 64 entries per word, column c in bit c % 64 of word c / 64.
/// Padding bits past cols() are always zero.
class MatFq {
 public:
  MatFq() = default;
  MatFq(std::size_t rows, std::size_t cols);

  static MatFq identity(std::size_t n);
  /// Parses rows of '0'/'1' characters; all rows must have equal length.
  static MatFq from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t stride() const noexcept { return stride_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * stride_ + c / 64] >> (c % 64)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v) noexcept {
    Word& w = data_[r * stride_ + c / 64];
    const Word bit = Word{1} << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) noexcept { data_[r * stride_ + c / 64] ^= Word{1} << (c % 64); }

  std::span<Word> row(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }
  std::span<const Word> row(std::size_t r) const noexcept { return {data_.data() + r * stride_, stride_}; }
  bool row_is_zero(std::size_t r) const noexcept;
  void xor_row(std::size_t dst, std::size_t src) noexcept;
  void swap_rows(std::size_t a, std::size_t b) noexcept;

  std::string row_string(std::size_t r) const;
  MatFq transpose() const;
  MatFq select_rows(std::span<const std::size_t> idx) const;
  MatFq select_cols(std::span<const std::size_t> idx) const;
  /// Rows [first, first + count).
  MatFq row_block(std::size_t first, std::size_t count) const;
  /// Stacks `below` under this matrix.
  MatFq vstack(const MatFq& below) const;

  friend MatFq operator+(const MatFq& a, const MatFq& b);
  friend MatFq operator*(const MatFq& a, const MatFq& b);
  friend bool operator==(const MatFq&, const MatFq&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

struct RrefFq {
  MatFq reduced;
  std::vector<std::size_t> pivots;  // pivot column of row i, increasing
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row echelon form. The elimination sweep is OpenMP-parallel over
/// rows; output is identical to reference::rref.
RrefFq rref(const MatFq& a);
std::size_t rank(const MatFq& a);
/// Rows span { v : a * v^T = 0 }; exactly cols - rank rows, in RREF-derived
/// canonical order (one row per free column, increasing).
MatFq right_nullspace_basis(const MatFq& a);
std::optional<MatFq> inverse(const MatFq& a);

/// Uniform invertible n x n matrix, by rejection.
MatFq random_invertible(std::size_t n, Rng& rng);
/// Uniform r x c matrix of rank r (r <= c), by rejection.
MatFq random_full_rank(std::size_t r, std::size_t c, Rng& rng);
MatFq random_matrix(std::size_t r, std::size_t c, Rng& rng);

/// Name of a flattened unknown: entry (row, col) of matrix `name`.
struct VarLabel {
  char name;
  std::size_t row;
  std::size_t col;
  friend bool operator==(const VarLabel&, const VarLabel&) = default;
};

/// Homogeneous system coeff * x^T = 0 over F_2.
struct LinearSystemFq {
  MatFq coeff;
  std::vector<VarLabel> labels;  // empty or one per variable

  std::size_t equations() const noexcept { return coeff.rows(); }
  std::size_t nvars() const noexcept { return coeff.cols(); }
};

/// Basis (as rows) of the solution space of a homogeneous system.
MatFq solve_homogeneous(const LinearSystemFq& system);

namespace reference {

/// Plain serial Gauss-Jordan elimination. Kept as the test oracle and
/// benchmark baseline for the parallel kernel.
RrefFq rref(const MatFq& a);
MatFq right_nullspace_basis(const MatFq& a);

}  // namespace reference

}  // namespace rankbreak
