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

// Randomized Moore-matrix property checks shared by the unit tests and the
// acceptance runner. Each returns the number of failing instances.

#include <cstddef>

#include "rankbreak/matfq.hpp"
#include "rankbreak/matfqm.hpp"
#include "rankbreak/rankcode.hpp"
#include "rankbreak/rng.hpp"

namespace rankbreak::props {

struct Shape {
  Field field;
  std::size_t n;
  std::size_t k;
};

inline Shape random_shape(Rng& rng, std::size_t min_n = 1) {
  const int m = 4 + static_cast<int>(rng.below(21));  // 4..24
  const std::size_t n = min_n + rng.below(static_cast<std::uint64_t>(m) - min_n + 1);
  const std::size_t k = 1 + rng.below(n);
  return {Field::with_degree(m), n, k};
}

/// Sum of Moore matrices is the Moore matrix of the sum.
inline std::size_t moore_sum(std::size_t instances, Rng& rng) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    const auto s = random_shape(rng);
    const VecFqm a = random_vector(s.field, s.n, rng), b = random_vector(s.field, s.n, rng);
    const MatFqm sum = moore_matrix(a, s.k) + moore_matrix(b, s.k);
    bad += !(is_moore(sum) && sum == moore_matrix(a + b, s.k));
  }
  return bad;
}

/// Moore matrix times a base-field matrix is the Moore matrix of a Q.
inline std::size_t moore_times_base(std::size_t instances, Rng& rng) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    const auto s = random_shape(rng);
    const std::size_t l = 1 + rng.below(12);
    const VecFqm a = random_vector(s.field, s.n, rng);
    const MatFq q = random_matrix(s.n, l, rng);
    const MatFqm prod = moore_matrix(a, s.k) * q;
    bad += !(is_moore(prod) && prod == moore_matrix(a * q, s.k));
  }
  return bad;
}

/// a of rank l < n factors as Mr_k(a) = [Mr_k(a') | 0] Q with rank(a') = l, Q invertible.
inline std::size_t moore_factorization(std::size_t instances, Rng& rng) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    const auto s = random_shape(rng, 2);
    const std::size_t l = rng.below(s.n);  // 0..n-1
    const VecFqm a = random_vector_of_rank(s.field, s.n, l, rng);
    const RankFactorization fac = rank_factorization(a);
    bool ok = rank_weight(a) == static_cast<int>(l) && fac.reduced.size() == l &&
              rank_weight(fac.reduced) == static_cast<int>(l) && fac.transform.rows() == s.n &&
              inverse(fac.transform).has_value();
    if (ok) {
      const VecFqm padded = concat(fac.reduced, VecFqm(s.field, s.n - l));
      ok = moore_matrix(a, s.k) == moore_matrix(padded, s.k) * fac.transform && padded * fac.transform == a;
    }
    bad += !ok;
  }
  return bad;
}

/// rank_weight(a) = n and k <= n <= m imply rank Mr_k(a) = k.
inline std::size_t moore_full_rank(std::size_t instances, Rng& rng) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    const auto s = random_shape(rng);
    const VecFqm a = random_vector_of_rank(s.field, s.n, s.n, rng);
    bad += rank(moore_matrix(a, s.k)) != s.k;
  }
  return bad;
}

/// A nonzero k x n Moore matrix with rows in Gab_{n,k}(g) has rank k and
/// spans the code; instances use Mr_k(gamma g) against a scrambled S Mr_k(g).
inline std::size_t moore_in_code_spans(std::size_t instances, Rng& rng) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    const auto s = random_shape(rng);
    const GabidulinCode code(random_vector_of_rank(s.field, s.n, s.n, rng), s.k);
    const MatFqm public_gen = random_invertible_ext(s.field, s.k, rng) * code.generator();
    Word gamma = 0;
    while (gamma == 0) gamma = rng.bits(s.field.degree());
    const MatFqm mr = moore_matrix(code.generating_vector().scaled(gamma), s.k);
    const bool rows_in_code = rank(public_gen.vstack(mr)) == s.k;
    bad += !(rows_in_code && rank(mr) == s.k && same_row_space(mr, public_gen));
  }
  return bad;
}

}  // namespace rankbreak::props
