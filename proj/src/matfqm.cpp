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

#include "rankbreak/matfqm.hpp"

#include <algorithm>
#include <bit>

#include "rankbreak/error.hpp"

namespace rankbreak {

VecFqm::VecFqm(const Field& field, std::vector<Word> elems) : field_(field), elems_(std::move(elems)) {
  for (Word e : elems_) require(field_.contains(e), "vector entry outside field");
}

bool VecFqm::is_zero() const noexcept {
  return std::all_of(elems_.begin(), elems_.end(), [](Word w) { return w == 0; });
}

VecFqm VecFqm::frobenius(long long l) const {
  VecFqm out(field_, size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = field_.frobenius(elems_[i], l);
  return out;
}

VecFqm VecFqm::scaled(Word gamma) const {
  VecFqm out(field_, size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = field_.mul(gamma, elems_[i]);
  return out;
}

VecFqm VecFqm::slice(std::size_t first, std::size_t count) const {
  require(first + count <= size(), "vector slice out of range");
  return VecFqm(field_, std::vector<Word>(elems_.begin() + first, elems_.begin() + first + count));
}

VecFqm operator+(const VecFqm& a, const VecFqm& b) {
  require(a.field_ == b.field_ && a.size() == b.size(), "vector sum: mismatch");
  VecFqm out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] ^= b[i];
  return out;
}

VecFqm concat(const VecFqm& a, const VecFqm& b) {
  require(a.field() == b.field(), "concat: field mismatch");
  std::vector<Word> elems(a.elems().begin(), a.elems().end());
  elems.insert(elems.end(), b.elems().begin(), b.elems().end());
  return VecFqm(a.field(), std::move(elems));
}

std::optional<Word> scalar_multiple(const VecFqm& a, const VecFqm& b) {
  if (a.field() != b.field() || a.size() != b.size()) return std::nullopt;
  const Field& f = a.field();
  std::optional<Word> gamma;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) {
      if (b[i] != 0) return std::nullopt;
      continue;
    }
    if (!gamma) gamma = f.div(b[i], a[i]);
    if (f.mul(*gamma, a[i]) != b[i]) return std::nullopt;
  }
  if (!gamma || *gamma == 0) return std::nullopt;
  return gamma;
}

MatFqm MatFqm::identity(const Field& field, std::size_t n) {
  MatFqm out(field, n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

MatFqm MatFqm::from_rows(const Field& field, const std::vector<VecFqm>& rows, std::size_t cols) {
  MatFqm out(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) out.set_row(r, rows[r]);
  return out;
}

FieldElement MatFqm::at(std::size_t r, std::size_t c) const {
  require(r < rows_ && c < cols_, "matrix index out of range");
  return FieldElement(field_, (*this)(r, c));
}

void MatFqm::set(std::size_t r, std::size_t c, const FieldElement& v) {
  require(r < rows_ && c < cols_, "matrix index out of range");
  require(v.field() == field_, "entry from a different field");
  (*this)(r, c) = v.coords();
}

VecFqm MatFqm::row(std::size_t r) const {
  return VecFqm(field_, std::vector<Word>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_));
}

void MatFqm::set_row(std::size_t r, const VecFqm& v) {
  require(v.field() == field_ && v.size() == cols_ && r < rows_, "set_row: mismatch");
  std::copy(v.elems().begin(), v.elems().end(), data_.begin() + r * cols_);
}

bool MatFqm::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

MatFqm MatFqm::transpose() const {
  MatFqm out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

MatFqm MatFqm::frobenius(long long l) const {
  MatFqm out = *this;
  for (Word& w : out.data_) w = field_.frobenius(w, l);
  return out;
}

MatFqm MatFqm::select_cols(std::span<const std::size_t> idx) const {
  MatFqm out(field_, rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < idx.size(); ++j) out(r, j) = (*this)(r, idx[j]);
  }
  return out;
}

MatFqm MatFqm::select_rows(std::span<const std::size_t> idx) const {
  MatFqm out(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    std::copy_n(data_.begin() + idx[i] * cols_, cols_, out.data_.begin() + i * cols_);
  }
  return out;
}

MatFqm MatFqm::vstack(const MatFqm& below) const {
  require(field_ == below.field_ && cols_ == below.cols_, "vstack: mismatch");
  MatFqm out(field_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
  return out;
}

MatFqm operator+(const MatFqm& a, const MatFqm& b) {
  require(a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum: mismatch");
  MatFqm out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] ^= b.data_[i];
  return out;
}

MatFqm operator*(const MatFqm& a, const MatFqm& b) {
  require(a.field_ == b.field_ && a.cols_ == b.rows_, "matrix product: mismatch");
  const Field& f = a.field_;
  MatFqm out(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Word x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) ^= f.mul(x, b(k, j));
    }
  }
  return out;
}

MatFqm operator*(const MatFqm& a, const MatFq& b) {
  require(a.cols_ == b.rows(), "matrix product: mismatch");
  MatFqm out(a.field_, a.rows_, b.cols());
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Word x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.get(k, j)) out(i, j) ^= x;
      }
    }
  }
  return out;
}

VecFqm operator*(const VecFqm& v, const MatFqm& a) {
  require(v.field() == a.field() && v.size() == a.rows(), "vector-matrix product: mismatch");
  const Field& f = a.field();
  VecFqm out(f, a.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] ^= f.mul(v[k], a(k, j));
  }
  return out;
}

VecFqm operator*(const VecFqm& v, const MatFq& a) {
  require(v.size() == a.rows(), "vector-matrix product: mismatch");
  VecFqm out(v.field(), a.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.get(k, j)) out[j] ^= v[k];
    }
  }
  return out;
}

RrefFqm rref(const MatFqm& a) {
  MatFqm m = a;
  const Field& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank) {
      auto a_row = m.row_span(piv);
      auto b_row = m.row_span(rank);
      std::swap_ranges(a_row.begin(), a_row.end(), b_row.begin());
    }
    const Word scale = f.inv(m(rank, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(rank, c) = f.mul(scale, m(rank, c));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Word factor = m(r, col);
      if (r == rank || factor == 0) continue;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) ^= f.mul(factor, m(rank, c));
    }
    pivots.push_back(col);
    ++rank;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const MatFqm& a) { return rref(a).rank(); }

MatFqm right_nullspace_basis(const MatFqm& a) {
  const auto red = rref(a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  MatFqm basis(a.field(), cols - red.rank(), cols);
  std::size_t out = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = 1;
    // char 2: -x = x
    for (std::size_t i = 0; i < red.rank(); ++i) basis(out, red.pivots[i]) = red.reduced(i, free);
    ++out;
  }
  return basis;
}

std::optional<MatFqm> inverse(const MatFqm& a) {
  require(a.rows() == a.cols(), "inverse of non-square matrix");
  const std::size_t n = a.rows();
  MatFqm aug(a.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  const auto red = rref(aug);
  if (red.rank() < n || (n > 0 && red.pivots[n - 1] != n - 1)) return std::nullopt;
  std::vector<std::size_t> right(n);
  for (std::size_t i = 0; i < n; ++i) right[i] = n + i;
  return red.reduced.select_cols(right);
}

bool same_row_space(const MatFqm& a, const MatFqm& b) {
  if (a.field() != b.field() || a.cols() != b.cols()) return false;
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(a.vstack(b));
}

std::optional<MatFqm> solve_left(const MatFqm& a, const MatFqm& b) {
  require(a.field() == b.field() && a.cols() == b.cols(), "solve_left: mismatch");
  const auto red = rref(a);
  if (red.rank() != a.rows()) return std::nullopt;
  const auto a_sq = a.select_cols(red.pivots);
  const auto inv = inverse(a_sq);
  if (!inv) return std::nullopt;
  MatFqm x = b.select_cols(red.pivots) * *inv;
  if (!(x * a == b)) return std::nullopt;
  return x;
}

MatFqm random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng) {
  MatFqm out(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = rng.bits(field.degree());
  }
  return out;
}

VecFqm random_vector(const Field& field, std::size_t n, Rng& rng) {
  VecFqm out(field, n);
  for (std::size_t i = 0; i < n; ++i) out[i] = rng.bits(field.degree());
  return out;
}

MatFqm random_invertible_ext(const Field& field, std::size_t n, Rng& rng) {
  for (;;) {
    MatFqm m = random_matrix(field, n, n, rng);
    if (rank(m) == n) return m;
  }
}

namespace {
void check_expand_args(const MatFqm& coeff_ext, const BasisVector& basis) {
  require(coeff_ext.field() == basis.field(), "expand_system: basis from a different field");
}
}  // namespace

LinearSystemFq expand_system(const MatFqm& coeff_ext, const BasisVector& basis) {
  check_expand_args(coeff_ext, basis);
  const std::size_t m = static_cast<std::size_t>(basis.size());
  const std::size_t eqs = coeff_ext.rows();
  const std::size_t nvars = coeff_ext.cols();
  LinearSystemFq sys{MatFq(eqs * m, nvars), {}};
  MatFq& out = sys.coeff;
  const long long neqs = static_cast<long long>(eqs);
#pragma omp parallel for schedule(static) if (eqs * nvars >= 4096)
  for (long long e = 0; e < neqs; ++e) {
    const std::size_t base_row = static_cast<std::size_t>(e) * m;
    for (std::size_t j = 0; j < nvars; ++j) {
      Word coords = basis.expand(coeff_ext(static_cast<std::size_t>(e), j));
      const Word bit = Word{1} << (j % 64);
      while (coords != 0) {
        const int i = std::countr_zero(coords);
        out.row(base_row + static_cast<std::size_t>(i))[j / 64] |= bit;
        coords &= coords - 1;
      }
    }
  }
  return sys;
}

namespace reference {

LinearSystemFq expand_system(const MatFqm& coeff_ext, const BasisVector& basis) {
  check_expand_args(coeff_ext, basis);
  const std::size_t m = static_cast<std::size_t>(basis.size());
  LinearSystemFq sys{MatFq(coeff_ext.rows() * m, coeff_ext.cols()), {}};
  for (std::size_t e = 0; e < coeff_ext.rows(); ++e) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < coeff_ext.cols(); ++j) {
        sys.coeff.set(e * m + i, j, (basis.expand(coeff_ext(e, j)) >> i) & 1);
      }
    }
  }
  return sys;
}

}  // namespace reference

}  // namespace rankbreak
