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

// Rank-metric machinery: rank weight and support, Moore and partial
// circulant matrices, Gabidulin codes with a bounded-distance decoder, and
// recovery of a generating vector from an arbitrary generator matrix.

#include <cstddef>
#include <vector>

#include "rankbreak/field.hpp"
#include "rankbreak/matfq.hpp"
#include "rankbreak/matfqm.hpp"
#include "rankbreak/rng.hpp"

namespace rankbreak {

/// Dimension over F_2 of the span of the entries.
int rank_weight(const VecFqm& v);
/// Reduced echelon F_2-basis of the span of the entries (canonical).
std::vector<Word> rank_support(const VecFqm& v);

/// a = (reduced, 0) * transform with rank_weight(reduced) = reduced.size()
/// = rank_weight(a) and transform invertible over F_2.
struct RankFactorization {
  VecFqm reduced;
  MatFq transform;
};
RankFactorization rank_factorization(const VecFqm& a);

/// k x n matrix whose row i is a^[i] (entrywise 2^i-th power).
MatFqm moore_matrix(const VecFqm& a, std::size_t k);
/// Every row is the Frobenius image of the previous one.
bool is_moore(const MatFqm& a);
/// First k rows of the circulant of a: row i is a cyclically shifted right i times.
MatFqm partial_circulant(const VecFqm& a, std::size_t k);
/// Q over F_2 (m x n) with basis_moore * Q = target, where basis_moore is the
/// k x m Moore matrix of a basis vector and target is any k x n Moore matrix.
MatFq moore_decompose(const MatFqm& target, const MatFqm& basis_moore);

/// Uniform-ish vector of length n with rank weight exactly r: r random
/// independent field elements mixed by a random full-rank r x n F_2 matrix.
VecFqm random_vector_of_rank(const Field& field, std::size_t n, std::size_t r, Rng& rng);

/// Gab_{n,k}(g): the row space of moore_matrix(g, k), with k <= n <= m and
/// rank_weight(g) = n.
class GabidulinCode {
 public:
  GabidulinCode(VecFqm g, std::size_t k);

  const Field& field() const noexcept { return g_.field(); }
  std::size_t n() const noexcept { return g_.size(); }
  std::size_t k() const noexcept { return k_; }
  /// floor((n - k) / 2)
  std::size_t correctable() const noexcept { return (n() - k_) / 2; }
  const VecFqm& generating_vector() const noexcept { return g_; }
  const MatFqm& generator() const noexcept { return generator_; }

  /// msg * Mr_k(g)
  VecFqm encode(const VecFqm& msg) const;

 private:
  VecFqm g_;
  std::size_t k_;
  MatFqm generator_;
};

struct DecodeResult {
  VecFqm message;
  VecFqm codeword;
  VecFqm error;
};

/// Bounded-distance decoding up to correctable() rank errors.
///
/// Solves the linearized reconstruction problem V(y_i) = N(g_i) with
/// q-deg V <= t and q-deg N <= k + t - 1, then recovers the message
/// polynomial f from N = V o f by left division. Throws
/// ErrorKind::decoding_failure when no codeword lies within distance t.
DecodeResult decode(const GabidulinCode& code, const VecFqm& received);

struct RecoveryOptions {
  /// Basis vector generating the Moore matrix of unknown-coefficient rows.
  BasisKind basis = BasisKind::polynomial;
};

struct GeneratingVectorRecovery {
  VecFqm g;
  /// Dimension over F_2 of the solution space of (M X) H^T = 0.
  std::size_t solution_dim;
};

/// Generating vector of the Gabidulin code spanned by `generator` (full row
/// rank k < n <= m). Builds a parity-check matrix H, expands (M X) H^T = 0
/// over F_2 in the m*n unknowns of X and returns the first row of M X for
/// the first nonzero solution. Throws ErrorKind::not_gabidulin when the
/// solution space is trivial.
GeneratingVectorRecovery recover_generating_vector_detailed(const MatFqm& generator,
                                                            const RecoveryOptions& opts = {});
VecFqm recover_generating_vector(const MatFqm& generator, const RecoveryOptions& opts = {});

/// Generating vector of the [n, n-k] dual code.
VecFqm dual_generating_vector(const GabidulinCode& code);
/// Gab_{n,k}(g^[l])
GabidulinCode frobenius_code(const GabidulinCode& code, long long l);
/// Basis (as rows) of the intersection of two row spaces.
MatFqm code_intersection(const MatFqm& c1, const MatFqm& c2);

/// True when moore_matrix(g, generator.rows()) spans the row space of generator.
bool generates(const VecFqm& g, const MatFqm& generator);

}  // namespace rankbreak
