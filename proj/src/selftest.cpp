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

#include <algorithm>
#include <chrono>
#include <string>

#include "rankbreak/attack.hpp"
#include "rankbreak/error.hpp"
#include "rankbreak/lautan.hpp"
#include "rankbreak/oracle.hpp"

namespace rankbreak::oracle {

namespace {

bool field_axioms(Rng& rng) {
  for (int m : {2, 3, 5, 8, 13, 35, 64}) {
    const Field f = Field::with_degree(m);
    for (int i = 0; i < 200; ++i) {
      const Word a = rng.bits(m), b = rng.bits(m), c = rng.bits(m);
      if (f.mul(a, f.mul(b, c)) != f.mul(f.mul(a, b), c)) return false;
      if (f.mul(a, b ^ c) != (f.mul(a, b) ^ f.mul(a, c))) return false;
      if (a != 0 && f.mul(a, f.inv(a)) != 1) return false;
      if (f.frobenius(a, m) != a) return false;
    }
  }
  return true;
}

bool elimination_matches_reference(Rng& rng) {
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng.below(150), cols = 1 + rng.below(150);
    const MatFq a = random_matrix(rows, cols, rng);
    const auto fast = rref(a);
    const auto ref = reference::rref(a);
    if (!(fast.reduced == ref.reduced) || fast.pivots != ref.pivots) return false;
  }
  return true;
}

bool nullspace_matches_enumeration(Rng& rng) {
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t vars = 1 + rng.below(12);
    LinearSystemFq sys{random_matrix(rng.below(10), vars, rng), {}};
    if (span_of_rows(solve_homogeneous(sys)) != exhaustive_system_solutions(sys)) return false;
  }
  return true;
}

bool expansion_preserves_solutions(Rng& rng) {
  for (int trial = 0; trial < 50; ++trial) {
    const Field f = Field::with_degree(2 + static_cast<int>(rng.below(3)));
    const MatFqm coeff = random_matrix(f, 1 + rng.below(3), 1 + rng.below(6), rng);
    const auto basis = BasisVector::normal(f, find_normal_element(f, rng));
    if (exhaustive_system_solutions(expand_system(coeff, basis)) != exhaustive_ext_solutions(coeff)) return false;
  }
  return true;
}

bool decoder_matches_brute_force(Rng& rng, const Decoder& decoder) {
  const Field f = Field::with_degree(6);
  for (int trial = 0; trial < 60; ++trial) {
    const GabidulinCode code(random_vector_of_rank(f, 6, 6, rng), 2);
    const VecFqm msg = random_vector(f, 2, rng);
    const VecFqm err = random_vector_of_rank(f, 6, rng.below(code.correctable() + 1), rng);
    const VecFqm y = code.encode(msg) + err;
    const auto expect = brute_force_decode(code, y);
    try {
      const auto got = decoder(code, y);
      if (!(got.codeword == expect.codeword) || !(got.message == expect.message)) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

bool generating_vector_census(Rng& rng) {
  const Field f = Field::with_degree(4);
  const GabidulinCode code(random_vector_of_rank(f, 4, 4, rng), 2);
  const auto found = enumerate_generating_vectors(code);
  if (found.size() != 15) return false;
  return std::all_of(found.begin(), found.end(),
                     [&](const VecFqm& v) { return scalar_multiple(code.generating_vector(), v).has_value(); });
}

bool minimum_distance(Rng& rng) {
  for (auto [m, k] : {std::pair{4, 2}, std::pair{5, 3}}) {
    const Field f = Field::with_degree(m);
    const GabidulinCode code(random_vector_of_rank(f, static_cast<std::size_t>(m), static_cast<std::size_t>(m), rng),
                             static_cast<std::size_t>(k));
    if (min_rank_distance(code) != m - k + 1) return false;
  }
  return true;
}

bool small_attack(Rng& rng) {
  const auto params = LauTanParams::make(14, 12, 5);
  for (int trial = 0; trial < 3; ++trial) {
    const KeyPair kp = keygen(params, rng);
    const RecoveredKey rec = full_attack(kp.pk);
    if (!(rec.key.t == kp.sk.t)) return false;
    const VecFqm msg = random_vector(kp.pk.field, params.k_prime, rng);
    const Ciphertext ct = encrypt(kp.pk, msg, rng);
    if (!(decrypt(rec.key, kp.pk, ct) == msg)) return false;
  }
  return true;
}

}  // namespace

bool run_selftest(std::ostream& log, const Decoder& decoder) {
  Rng rng(0x5e1f7e57ULL);
  struct Suite {
    const char* name;
    std::function<bool()> run;
  };
  const Suite suites[] = {
      {"field axioms", [&] { return field_axioms(rng); }},
      {"parallel rref == serial reference", [&] { return elimination_matches_reference(rng); }},
      {"nullspace == exhaustive solutions", [&] { return nullspace_matches_enumeration(rng); }},
      {"subfield expansion preserves solutions", [&] { return expansion_preserves_solutions(rng); }},
      {"decoder == brute-force nearest codeword", [&] { return decoder_matches_brute_force(rng, decoder); }},
      {"generating-vector census (4,4,2)", [&] { return generating_vector_census(rng); }},
      {"minimum rank distance n-k+1", [&] { return minimum_distance(rng); }},
      {"key recovery at (14,12,5)", [&] { return small_attack(rng); }},
  };
  bool all = true;
  for (const auto& s : suites) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = s.run();
    } catch (const std::exception& e) {
      log << "  exception: " << e.what() << "\n";
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    log << (ok ? "PASS " : "FAIL ") << s.name << " (" << static_cast<long>(ms) << " ms)\n";
    all = all && ok;
  }
  return all;
}

}  // namespace rankbreak::oracle
