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

// Dense vectors and matrices over GF(2^m), plus the subfield expanding
// transform that turns GF(2^m)-linear equations in F_2 unknowns into F_2
// equations.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rankbreak/field.hpp"
#include "rankbreak/matfq.hpp"
#include "rankbreak/rng.hpp"

namespace rankbreak {

class VecFqm {
 public:
  VecFqm(const Field& field, std::size_t n) : field_(field), elems_(n, 0) {}
  /// Throws if any entry lies outside the field.
  VecFqm(const Field& field, std::vector<Word> elems);

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return elems_.size(); }
  Word operator[](std::size_t i) const noexcept { return elems_[i]; }
  Word& operator[](std::size_t i) noexcept { return elems_[i]; }
  FieldElement at(std::size_t i) const { return FieldElement(field_, elems_.at(i)); }
  std::span<const Word> elems() const noexcept { return elems_; }
  std::span<Word> elems() noexcept { return elems_; }
  bool is_zero() const noexcept;

  VecFqm frobenius(long long l) const;
  VecFqm scaled(Word gamma) const;
  /// Entries [first, first + count).
  VecFqm slice(std::size_t first, std::size_t count) const;

  friend VecFqm operator+(const VecFqm& a, const VecFqm& b);
  friend VecFqm operator-(const VecFqm& a, const VecFqm& b) { return a + b; }
  friend bool operator==(const VecFqm&, const VecFqm&) = default;

 private:
  Field field_;
  std::vector<Word> elems_;
};

/// Concatenation (a, b).
VecFqm concat(const VecFqm& a, const VecFqm& b);
/// If b = gamma * a for some nonzero gamma, returns gamma.
std::optional<Word> scalar_multiple(const VecFqm& a, const VecFqm& b);

class MatFqm {
 public:
  MatFqm(const Field& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static MatFqm identity(const Field& field, std::size_t n);
  /// Matrix whose rows are the given vectors (all of equal length, same field).
  static MatFqm from_rows(const Field& field, const std::vector<VecFqm>& rows, std::size_t cols);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Word operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Word& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  FieldElement at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const FieldElement& v);

  std::span<const Word> row_span(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<Word> row_span(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  VecFqm row(std::size_t r) const;
  void set_row(std::size_t r, const VecFqm& v);
  bool is_zero() const noexcept;

  MatFqm transpose() const;
  MatFqm frobenius(long long l) const;
  MatFqm select_cols(std::span<const std::size_t> idx) const;
  MatFqm select_rows(std::span<const std::size_t> idx) const;
  MatFqm vstack(const MatFqm& below) const;

  friend MatFqm operator+(const MatFqm& a, const MatFqm& b);
  friend MatFqm operator-(const MatFqm& a, const MatFqm& b) { return a + b; }
  friend MatFqm operator*(const MatFqm& a, const MatFqm& b);
  /// Extension-field matrix times base-field matrix.
  friend MatFqm operator*(const MatFqm& a, const MatFq& b);
  friend bool operator==(const MatFqm&, const MatFqm&) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Word> data_;
};

/// Row vector times matrix.
VecFqm operator*(const VecFqm& v, const MatFqm& a);
VecFqm operator*(const VecFqm& v, const MatFq& a);

struct RrefFqm {
  MatFqm reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

RrefFqm rref(const MatFqm& a);
std::size_t rank(const MatFqm& a);
/// Rows span { v : a * v^T = 0 } over GF(2^m); cols - rank rows.
MatFqm right_nullspace_basis(const MatFqm& a);
std::optional<MatFqm> inverse(const MatFqm& a);
/// True when both matrices have the same row space.
bool same_row_space(const MatFqm& a, const MatFqm& b);
/// Solves X * a = b for X when a has full row rank; nullopt when no solution.
std::optional<MatFqm> solve_left(const MatFqm& a, const MatFqm& b);

MatFqm random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng);
VecFqm random_vector(const Field& field, std::size_t n, Rng& rng);
/// Uniform element of GL_n(GF(2^m)), by rejection.
MatFqm random_invertible_ext(const Field& field, std::size_t n, Rng& rng);

/// Subfield expanding transform. Row e of `coeff_ext` is the equation
/// sum_j x_j * coeff_ext(e, j) = 0 with x_j in F_2; it becomes the m rows
/// e*m .. e*m+m-1 of the result, row e*m+i collecting coordinate i of every
/// coefficient in `basis`. Both systems have the same F_2 solution set.
LinearSystemFq expand_system(const MatFqm& coeff_ext, const BasisVector& basis);

namespace reference {
LinearSystemFq expand_system(const MatFqm& coeff_ext, const BasisVector& basis);
}  // namespace reference

}  // namespace rankbreak
