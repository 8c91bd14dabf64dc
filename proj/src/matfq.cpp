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

#include "rankbreak/matfq.hpp"

#include <algorithm>

#include "rankbreak/error.hpp"

namespace rankbreak {

namespace {

constexpr std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }

// Below this many words of work per pivot the sweep stays serial.
constexpr std::size_t kParallelThreshold = 1 << 14;

MatFq nullspace_from_rref(const RrefFq& r, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  MatFq basis(cols - r.rank(), cols);
  std::size_t out = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis.set(out, free, true);
    for (std::size_t i = 0; i < r.rank(); ++i) {
      if (r.reduced.get(i, free)) basis.set(out, r.pivots[i], true);
    }
    ++out;
  }
  return basis;
}

}  // namespace

MatFq::MatFq(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {}

MatFq MatFq::identity(std::size_t n) {
  MatFq out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, true);
  return out;
}

MatFq MatFq::from_strings(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  MatFq out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "ragged bit matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = rows[r][c];
      require(ch == '0' || ch == '1', "bit matrix rows must be 0/1 strings");
      out.set(r, c, ch == '1');
    }
  }
  return out;
}

bool MatFq::row_is_zero(std::size_t r) const noexcept {
  const auto words = row(r);
  return std::all_of(words.begin(), words.end(), [](Word w) { return w == 0; });
}

void MatFq::xor_row(std::size_t dst, std::size_t src) noexcept {
  Word* d = data_.data() + dst * stride_;
  const Word* s = data_.data() + src * stride_;
  for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void MatFq::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * stride_, data_.begin() + (a + 1) * stride_, data_.begin() + b * stride_);
}

std::string MatFq::row_string(std::size_t r) const {
  std::string s(cols_, '0');
  for (std::size_t c = 0; c < cols_; ++c) {
    if (get(r, c)) s[c] = '1';
  }
  return s;
}

MatFq MatFq::transpose() const {
  MatFq out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) out.set(c, r, true);
    }
  }
  return out;
}

MatFq MatFq::select_rows(std::span<const std::size_t> idx) const {
  MatFq out(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    std::copy_n(row(idx[i]).begin(), stride_, out.row(i).begin());
  }
  return out;
}

MatFq MatFq::select_cols(std::span<const std::size_t> idx) const {
  MatFq out(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < idx.size(); ++j) out.set(r, j, get(r, idx[j]));
  }
  return out;
}

MatFq MatFq::row_block(std::size_t first, std::size_t count) const {
  require(first + count <= rows_, "row block out of range");
  MatFq out(count, cols_);
  std::copy_n(data_.begin() + first * stride_, count * stride_, out.data_.begin());
  return out;
}

MatFq MatFq::vstack(const MatFq& below) const {
  require(cols_ == below.cols_, "vstack: column mismatch");
  MatFq out(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
  return out;
}

MatFq operator+(const MatFq& a, const MatFq& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum: shape mismatch");
  MatFq out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] ^= b.data_[i];
  return out;
}

MatFq operator*(const MatFq& a, const MatFq& b) {
  require(a.cols_ == b.rows_, "matrix product: shape mismatch");
  MatFq out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a.get(i, k)) continue;
      const auto src = b.row(k);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

RrefFq rref(const MatFq& a) {
  MatFq m = a;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t stride = m.stride();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    const std::size_t wi = col / 64;
    const Word bit = Word{1} << (col % 64);
    std::size_t piv = rank;
    while (piv < rows && !(m.row(piv)[wi] & bit)) ++piv;
    if (piv == rows) continue;
    m.swap_rows(piv, rank);

    // Rows below `rank` are zero left of `col`, so the pivot row is too and
    // the update can start at word wi.
    const Word* prow = m.row(rank).data();
    Word* base = m.row(0).data();
    const std::size_t span = stride - wi;
    const long long nrows = static_cast<long long>(rows);
    const long long skip = static_cast<long long>(rank);
#pragma omp parallel for schedule(static) if (rows * span >= kParallelThreshold)
    for (long long r = 0; r < nrows; ++r) {
      Word* dst = base + static_cast<std::size_t>(r) * stride;
      if (r != skip && (dst[wi] & bit)) {
        for (std::size_t w = wi; w < stride; ++w) dst[w] ^= prow[w];
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const MatFq& a) { return rref(a).rank(); }

MatFq right_nullspace_basis(const MatFq& a) { return nullspace_from_rref(rref(a), a.cols()); }

std::optional<MatFq> inverse(const MatFq& a) {
  require(a.rows() == a.cols(), "inverse of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return MatFq();
  MatFq aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, a.get(r, c));
    aug.set(r, n + r, true);
  }
  auto red = rref(aug);
  if (red.rank() < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  std::vector<std::size_t> right(n);
  for (std::size_t i = 0; i < n; ++i) right[i] = n + i;
  return red.reduced.select_cols(right);
}

MatFq random_matrix(std::size_t r, std::size_t c, Rng& rng) {
  MatFq out(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    auto words = out.row(i);
    for (std::size_t w = 0; w < words.size(); ++w) {
      const std::size_t live = std::min<std::size_t>(64, c - 64 * w);
      words[w] = rng.bits(static_cast<int>(live));
    }
  }
  return out;
}

MatFq random_full_rank(std::size_t r, std::size_t c, Rng& rng) {
  require(r <= c, "full-rank sampling needs rows <= cols");
  for (;;) {
    MatFq m = random_matrix(r, c, rng);
    if (rank(m) == r) return m;
  }
}

MatFq random_invertible(std::size_t n, Rng& rng) { return random_full_rank(n, n, rng); }

MatFq solve_homogeneous(const LinearSystemFq& system) {
  require(system.labels.empty() || system.labels.size() == system.nvars(), "label count mismatch");
  return right_nullspace_basis(system.coeff);
}

namespace reference {

RrefFq rref(const MatFq& a) {
  MatFq m = a;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && !m.get(piv, col)) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, rank);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != rank && m.get(r, col)) m.xor_row(r, rank);
    }
    pivots.push_back(col);
    ++rank;
  }
  return {std::move(m), std::move(pivots)};
}

MatFq right_nullspace_basis(const MatFq& a) { return nullspace_from_rref(reference::rref(a), a.cols()); }

}  // namespace reference

}  // namespace rankbreak
