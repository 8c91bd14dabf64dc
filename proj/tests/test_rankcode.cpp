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

#include <doctest.h>

#include "properties.hpp"
#include "rankbreak/error.hpp"
#include "rankbreak/oracle.hpp"
#include "rankbreak/rankcode.hpp"

using namespace rankbreak;

TEST_CASE("rank weight") {
  const Field f8 = Field::with_degree(3);
  CHECK(rank_weight(VecFqm(f8, 4)) == 0);
  CHECK(rank_weight(VecFqm(f8, {1, 0b010, 0b011})) == 2);
  CHECK(rank_weight(VecFqm(f8, BasisVector::polynomial(f8).elements())) == 3);

  Rng rng(6);
  const Field f = Field::with_degree(8);
  for (int i = 0; i < 1000; ++i) {
    const VecFqm v = random_vector_of_rank(f, 6, 3, rng);
    REQUIRE(rank_weight(v) == 3);
  }
  CHECK(random_vector_of_rank(f, 6, 0, rng).is_zero());
  CHECK(rank_weight(random_vector_of_rank(f, 8, 8, rng)) == 8);
  CHECK_THROWS_AS(random_vector_of_rank(f, 4, 5, rng), Error);

  // Support is a canonical basis of the coordinate span.
  const VecFqm v = random_vector_of_rank(f, 6, 4, rng);
  CHECK(rank_support(v).size() == 4);
  CHECK(rank_support(v) == rank_support(v * random_invertible(6, rng)));
}

TEST_CASE("Moore and partial circulant matrices") {
  const Field f8 = Field::with_degree(3);
  const Word a = 0b010, a2 = 0b100, a4 = 0b110;
  const MatFqm mr = moore_matrix(VecFqm(f8, {a, a2}), 2);
  CHECK(mr(0, 0) == a);
  CHECK(mr(0, 1) == a2);
  CHECK(mr(1, 0) == a2);
  CHECK(mr(1, 1) == f8.mul(a2, a2));
  CHECK(mr(1, 1) == a4);
  CHECK(is_moore(mr));
  MatFqm bent = mr;
  bent(1, 0) ^= 1;
  CHECK_FALSE(is_moore(bent));
  CHECK(moore_matrix(VecFqm(f8, {1, 2, 3}), 1) == MatFqm::from_rows(f8, {VecFqm(f8, {1, 2, 3})}, 3));

  const Field f = Field::with_degree(8);
  const VecFqm abc(f, {0x11, 0x22, 0x33});
  const MatFqm cir = partial_circulant(abc, 2);
  CHECK(cir.row(0) == abc);
  CHECK(cir.row(1) == VecFqm(f, {0x33, 0x11, 0x22}));
  const MatFqm full = partial_circulant(abc, 3);
  CHECK(full.row(2) == VecFqm(f, {0x22, 0x33, 0x11}));

  Rng rng(12);
  for (int m : {4, 6, 8, 11}) {
    const Field fm = Field::with_degree(m);
    for (int i = 0; i < 10; ++i) {
      const BasisVector nb = BasisVector::normal(fm, find_normal_element(fm, rng));
      const VecFqm av(fm, nb.elements());
      for (std::size_t k = 1; k <= static_cast<std::size_t>(m); ++k) CHECK(partial_circulant(av, k) == moore_matrix(av, k));
    }
  }
}

TEST_CASE("Moore decomposition") {
  Rng rng(13);
  const Field f = Field::with_degree(10);
  const BasisVector pb = BasisVector::polynomial(f);
  const VecFqm a(f, pb.elements());
  for (std::size_t k : {1, 3, 6}) {
    const MatFqm basis_moore = moore_matrix(a, k);
    CHECK(moore_decompose(basis_moore, basis_moore) == MatFq::identity(10));
    for (int i = 0; i < 100; ++i) {
      const MatFqm target = moore_matrix(random_vector(f, 7, rng), k);
      const MatFq q = moore_decompose(target, basis_moore);
      CHECK(q.rows() == 10);
      CHECK(q.cols() == 7);
      CHECK(basis_moore * q == target);
    }
  }
}

TEST_CASE("Moore properties") {
  Rng rng(14);
  CHECK(props::moore_sum(200, rng) == 0);
  CHECK(props::moore_times_base(200, rng) == 0);
  CHECK(props::moore_factorization(200, rng) == 0);
  CHECK(props::moore_full_rank(200, rng) == 0);
  CHECK(props::moore_in_code_spans(200, rng) == 0);
}

TEST_CASE("Gabidulin encoding and minimum distance") {
  Rng rng(15);
  const Field f = Field::with_degree(12);
  const GabidulinCode code(random_vector_of_rank(f, 10, 10, rng), 4);
  CHECK(code.encode(VecFqm(f, 4)).is_zero());
  VecFqm e1(f, 4);
  e1[0] = 1;
  CHECK(code.encode(e1) == code.generating_vector());
  for (int i = 0; i < 300; ++i) {
    const VecFqm c = code.encode(random_vector(f, 4, rng));
    CHECK((c.is_zero() || rank_weight(c) >= 7));
  }
  CHECK_THROWS_AS(GabidulinCode(random_vector_of_rank(f, 10, 9, rng), 4), Error);
  CHECK_THROWS_AS(GabidulinCode(random_vector_of_rank(f, 10, 10, rng), 11), Error);

  const Field f4 = Field::with_degree(4);
  CHECK(oracle::min_rank_distance(GabidulinCode(random_vector_of_rank(f4, 4, 4, rng), 2)) == 3);
}

TEST_CASE("decoding") {
  Rng rng(16);
  const Field f = Field::with_degree(22);
  const GabidulinCode code(random_vector_of_rank(f, 18, 18, rng), 9);
  for (int i = 0; i < 50; ++i) {
    const VecFqm msg = random_vector(f, 9, rng);
    const VecFqm c = code.encode(msg);
    const std::size_t r = rng.below(code.correctable() + 1);
    const VecFqm e = random_vector_of_rank(f, 18, r, rng);
    const DecodeResult d = decode(code, c + e);
    CHECK(d.message == msg);
    CHECK(d.codeword == c);
    CHECK(d.error == e);
  }
  const VecFqm c = code.encode(random_vector(f, 9, rng));
  CHECK(decode(code, c).error.is_zero());

  // Beyond t: either a reported failure or some other codeword, never a crash.
  const VecFqm far = c + random_vector_of_rank(f, 18, 8, rng);
  try {
    const DecodeResult d = decode(code, far);
    CHECK(rank_weight(d.error) <= 4);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::decoding_failure);
  }

  // Tiny-parameter agreement with brute force.
  const Field f6 = Field::with_degree(6);
  for (int i = 0; i < 40; ++i) {
    const GabidulinCode tiny(random_vector_of_rank(f6, 6, 6, rng), 2);
    const VecFqm y = tiny.encode(random_vector(f6, 2, rng)) + random_vector_of_rank(f6, 6, rng.below(3), rng);
    const auto expect = oracle::brute_force_decode(tiny, y);
    const auto got = decode(tiny, y);
    CHECK(got.codeword == expect.codeword);
    CHECK(got.message == expect.message);
  }
}

TEST_CASE("generating-vector recovery") {
  Rng rng(17);
  const Field f = Field::with_degree(16);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 4 + rng.below(12), k = 1 + rng.below(n - 1);
    const GabidulinCode code(random_vector_of_rank(f, n, n, rng), k);
    const auto direct = recover_generating_vector_detailed(code.generator());
    CHECK(direct.solution_dim == 16);
    CHECK(scalar_multiple(code.generating_vector(), direct.g).has_value());

    const MatFqm scrambled = random_invertible_ext(f, k, rng) * code.generator();
    for (BasisKind b : {BasisKind::polynomial, BasisKind::normal}) {
      const VecFqm g2 = recover_generating_vector(scrambled, {b});
      CHECK(scalar_multiple(code.generating_vector(), g2).has_value());
      CHECK(generates(g2, scrambled));
    }
  }
  // A random code is not Gabidulin.
  const MatFqm random_gen = random_matrix(f, 5, 12, rng);
  try {
    recover_generating_vector(random_gen);
    FAIL("expected not_gabidulin");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_gabidulin);
  }
}

TEST_CASE("duality, Frobenius codes and intersections") {
  Rng rng(18);
  const Field f = Field::with_degree(8);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 2 + rng.below(7), k = 1 + rng.below(n - 1);
    const GabidulinCode code(random_vector_of_rank(f, n, n, rng), k);
    const VecFqm h = dual_generating_vector(code);
    CHECK((moore_matrix(h, n - k) * code.generator().transpose()).is_zero());
    const GabidulinCode dual(h, n - k);
    CHECK(scalar_multiple(code.generating_vector(), dual_generating_vector(dual)).has_value());

    CHECK(frobenius_code(code, 0).generator() == code.generator());
    CHECK(same_row_space(code_intersection(code.generator(), code.generator()), code.generator()));
  }

  const GabidulinCode c(random_vector_of_rank(f, 7, 7, rng), 4);
  for (long long l = 1; l <= 3; ++l) {
    const MatFqm inter = code_intersection(c.generator(), frobenius_code(c, l).generator());
    CHECK(inter.rows() == 4 - static_cast<std::size_t>(l));
    CHECK(rank(inter) == inter.rows());
    const VecFqm g = recover_generating_vector(inter);
    CHECK(scalar_multiple(c.generating_vector().frobenius(l), g).has_value());
  }
}
