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

#include "rankbreak/error.hpp"
#include "rankbreak/matfq.hpp"
#include "rankbreak/matfqm.hpp"
#include "rankbreak/oracle.hpp"

using namespace rankbreak;

namespace {

bool annihilates(const MatFq& a, const MatFq& basis) { return (a * basis.transpose()) == MatFq(a.rows(), basis.rows()); }

}  // namespace

TEST_CASE("F2 basics") {
  CHECK(rank(MatFq::identity(77)) == 77);
  CHECK(rank(MatFq(5, 9)) == 0);

  const MatFq ones = MatFq::from_strings({"11"});
  const MatFq ns = right_nullspace_basis(ones);
  REQUIRE(ns.rows() == 1);
  CHECK(ns.row_string(0) == "11");

  const MatFq a = MatFq::from_strings({"101", "011"});
  CHECK(a.transpose() == MatFq::from_strings({"10", "01", "11"}));
  CHECK((a + a) == MatFq(2, 3));
  CHECK_THROWS_AS(MatFq::from_strings({"10", "1"}), Error);
  CHECK_THROWS_AS(MatFq::from_strings({"1x"}), Error);
}

TEST_CASE("rank against span enumeration on 4x4") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const MatFq a = random_matrix(4, 4, rng);
    CHECK(oracle::span_of_rows(a).size() == (std::size_t{1} << rank(a)));
  }
}

TEST_CASE("random constructors") {
  Rng rng(9);
  CHECK(random_invertible(1, rng) == MatFq::identity(1));
  for (int i = 0; i < 50; ++i) {
    CHECK(rank(random_full_rank(3, 5, rng)) == 3);
    const MatFq t = random_invertible(20, rng);
    const auto inv = inverse(t);
    REQUIRE(inv.has_value());
    CHECK((t * *inv) == MatFq::identity(20));
  }
  Rng r1(77), r2(77);
  CHECK(random_matrix(30, 70, r1) == random_matrix(30, 70, r2));
  CHECK_FALSE(inverse(MatFq::from_strings({"11", "11"})).has_value());
  CHECK(inverse(MatFq(0, 0)).has_value());
}

TEST_CASE("rref invariants and nullspace") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = rng.below(90), cols = 1 + rng.below(140);
    const MatFq a = random_matrix(rows, cols, rng);
    const auto r = rref(a);
    CHECK(rref(r.reduced).reduced == r.reduced);
    const MatFq ns = right_nullspace_basis(a);
    CHECK(ns.rows() + r.rank() == cols);
    CHECK(annihilates(a, ns));
    CHECK(rank(ns) == ns.rows());
  }
}

TEST_CASE("parallel elimination matches the serial reference") {
  Rng rng(1234);
  // Sizes both below and above the parallel threshold.
  for (auto [rows, cols] : {std::pair<std::size_t, std::size_t>{50, 70}, {700, 1000}, {2100, 1300}, {1782, 792}}) {
    MatFq a = random_matrix(rows, cols, rng);
    // Inject dependencies so rank deficiency is exercised.
    for (std::size_t r = rows / 2; r < rows; r += 3) {
      a.xor_row(r, r - rows / 4);
      a.xor_row(r, r - rows / 2);
    }
    const auto fast = rref(a);
    const auto slow = reference::rref(a);
    CHECK(fast.reduced == slow.reduced);
    CHECK(fast.pivots == slow.pivots);
    CHECK(right_nullspace_basis(a) == reference::right_nullspace_basis(a));
  }
}

TEST_CASE("subfield expansion examples over GF(4)") {
  const Field f4 = Field::with_degree(2);
  const BasisVector b = BasisVector::from_elements(f4, {0b01, 0b10});

  MatFqm eq(f4, 1, 2);
  eq(0, 0) = 0b10;  // w
  eq(0, 1) = 0b11;  // 1 + w
  const auto sys = expand_system(eq, b);
  CHECK(sys.coeff == MatFq::from_strings({"01", "11"}));
  CHECK(solve_homogeneous(sys).rows() == 0);

  const auto zero = expand_system(MatFqm(f4, 1, 3), b);
  CHECK(zero.coeff == MatFq(2, 3));

  MatFqm unit(f4, 1, 1);
  unit(0, 0) = 1;
  CHECK(expand_system(unit, b).coeff == MatFq::from_strings({"1", "0"}));
}

TEST_CASE("subfield expansion preserves solution sets") {
  Rng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const Field f = Field::with_degree(2 + static_cast<int>(rng.below(3)));
    const MatFqm coeff = random_matrix(f, 1 + rng.below(3), 1 + rng.below(6), rng);
    const BasisVector b = rng.coin() ? BasisVector::polynomial(f) : BasisVector::normal(f, find_normal_element(f, rng));
    const auto sys = expand_system(coeff, b);
    CHECK(oracle::exhaustive_system_solutions(sys) == oracle::exhaustive_ext_solutions(coeff));
    CHECK(oracle::span_of_rows(solve_homogeneous(sys)) == oracle::exhaustive_system_solutions(sys));
  }
  // Parallel and serial expansions agree at attack scale.
  const Field f = Field::with_degree(22);
  const MatFqm big = random_matrix(f, 81, 792, rng);
  const BasisVector nb = BasisVector::normal(f, canonical_normal_element(f));
  CHECK(expand_system(big, nb).coeff == reference::expand_system(big, nb).coeff);
}

TEST_CASE("extension-field linear algebra") {
  Rng rng(99);
  const Field f = Field::with_degree(22);
  for (int trial = 0; trial < 20; ++trial) {
    const MatFqm s = random_invertible_ext(f, 9, rng);
    const auto inv = inverse(s);
    REQUIRE(inv.has_value());
    CHECK((s * *inv) == MatFqm::identity(f, 9));

    const MatFqm a = random_matrix(f, 5, 12, rng);
    const MatFqm x = random_matrix(f, 3, 5, rng);
    const MatFqm b = x * a;
    const auto solved = solve_left(a, b);
    REQUIRE(solved.has_value());
    CHECK((*solved * a) == b);
    CHECK(same_row_space(a, random_invertible_ext(f, 5, rng) * a));
    CHECK_FALSE(same_row_space(a, random_matrix(f, 5, 12, rng)));

    const MatFqm ns = right_nullspace_basis(a);
    CHECK(ns.rows() == 12 - rank(a));
    CHECK((a * ns.transpose()).is_zero());

    const MatFqm rr = rref(a).reduced;
    CHECK(rref(rr).reduced == rr);
  }
  MatFqm sing(f, 2, 2);
  sing(0, 0) = 1;
  sing(1, 0) = 1;
  CHECK_FALSE(inverse(sing).has_value());

  const MatFqm a = random_matrix(f, 2, 6, rng);
  CHECK_FALSE(solve_left(a, random_matrix(f, 1, 6, rng)).has_value());
}

TEST_CASE("vector helpers") {
  const Field f = Field::with_degree(8);
  Rng rng(4);
  const VecFqm v = random_vector(f, 6, rng);
  const Word gamma = 0x53;
  CHECK(scalar_multiple(v, v.scaled(gamma)) == std::optional<Word>(gamma));
  VecFqm w = v;
  w[0] ^= 1;
  if (!v.is_zero()) CHECK_FALSE(scalar_multiple(v, w.scaled(gamma)).has_value());
  CHECK(concat(v.slice(0, 2), v.slice(2, 4)) == v);
  CHECK(v.frobenius(8) == v);
  CHECK((v + v).is_zero());
}
