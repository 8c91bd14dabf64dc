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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "properties.hpp"
#include "rankbreak/attack.hpp"
#include "rankbreak/error.hpp"
#include "rankbreak/io.hpp"
#include "rankbreak/lautan.hpp"
#include "rankbreak/oracle.hpp"

using namespace rankbreak;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Attack success at the three benchmark sizes.
Outcome table1() {
  struct Row {
    int m;
    std::size_t n, k;
    double published_s;
  };
  const Row rows[] = {{22, 18, 9, 8.6}, {28, 22, 9, 40.7}, {35, 26, 12, 173.2}};
  constexpr int kTrials = 20;
  bool pass = true;
  std::ostringstream detail;
  for (const Row& row : rows) {
    const auto params = LauTanParams::make(row.m, row.n, row.k);
    int ok = 0;
    double total_ms = 0;
    for (int i = 0; i < kTrials; ++i) {
      Rng rng(derive_seed(0x7ab1e1, static_cast<std::uint64_t>(row.m * 1000 + i)));
      const KeyPair kp = keygen(params, rng);
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const RecoveredKey rec = full_attack(kp.pk);
        total_ms += ms_since(t0);
        ok += rec.key.t == kp.sk.t && rec.key.s * rec.key.gen == kp.sk.s * kp.sk.gen;
      } catch (const Error&) {
        total_ms += ms_since(t0);
      }
    }
    const double mean_s = total_ms / kTrials / 1000.0;
    const bool row_ok = ok == kTrials && mean_s <= 10 * row.published_s;
    pass = pass && row_ok;
    detail << "(" << row.m << "," << row.n << "," << row.k << ") " << ok << "/" << kTrials << " mean "
           << fmt("%.3f", mean_s) << "s (limit " << fmt("%.0f", 10 * row.published_s) << "s); ";
  }
  return {pass, detail.str()};
}

// 2. Nullspace dimension equals m.
Outcome assumption() {
  const auto params = LauTanParams::make(25, 23, 10);
  int exact = 0;
  std::size_t lo = ~std::size_t{0}, hi = 0;
  for (int i = 0; i < 100; ++i) {
    Rng rng(derive_seed(0xa55e, static_cast<std::uint64_t>(i)));
    const std::size_t dim = attack_nullspace_dim(keygen(params, rng).pk);
    exact += dim == 25;
    lo = std::min(lo, dim);
    hi = std::max(hi, dim);
  }
  return {exact == 100, std::to_string(exact) + "/100 with dim 25 (range " + std::to_string(lo) + ".." +
                            std::to_string(hi) + ")"};
}

// 3. Generating vectors of Gab_{4,2}(g) are exactly the nonzero multiples of g.
Outcome census() {
  Rng rng(0xce5);
  const Field f = Field::with_degree(4);
  bool pass = true;
  std::size_t sizes = 0;
  for (int trial = 0; trial < 5; ++trial) {
    const GabidulinCode code(random_vector_of_rank(f, 4, 4, rng), 2);
    auto key = [](const VecFqm& v) { return std::vector<Word>(v.elems().begin(), v.elems().end()); };
    std::vector<std::vector<Word>> found, expected;
    for (const auto& v : oracle::enumerate_generating_vectors(code)) found.push_back(key(v));
    for (Word gamma = 1; gamma < 16; ++gamma) expected.push_back(key(code.generating_vector().scaled(gamma)));
    std::sort(found.begin(), found.end());
    std::sort(expected.begin(), expected.end());
    pass = pass && found.size() == 15 && found == expected;
    sizes += found.size();
  }
  return {pass, "5 codes, " + std::to_string(sizes) + " generating vectors found (expected 75), sets equal {gamma g}"};
}

// 4. Minimum rank distance n - k + 1.
Outcome min_distance() {
  Rng rng(0xd15);
  bool pass = true;
  std::ostringstream detail;
  for (auto [m, k] : {std::pair{4, 2}, std::pair{5, 3}}) {
    const Field f = Field::with_degree(m);
    for (int trial = 0; trial < 3; ++trial) {
      const auto n = static_cast<std::size_t>(m);
      const int d = oracle::min_rank_distance(GabidulinCode(random_vector_of_rank(f, n, n, rng), static_cast<std::size_t>(k)));
      pass = pass && d == m - k + 1;
      if (trial == 0) detail << "(" << m << "," << m << "," << k << ") d=" << d << " ";
    }
  }
  return {pass, detail.str() + "(3 codes each)"};
}

// 5. G intersect G^[l] = Gab_{n,k-l}(g^[l]).
Outcome intersection() {
  Rng rng(0x1a7);
  const Field f = Field::with_degree(8);
  int ok = 0, total = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const GabidulinCode code(random_vector_of_rank(f, 7, 7, rng), 4);
    for (long long l = 1; l <= 3; ++l) {
      ++total;
      const MatFqm inter = code_intersection(code.generator(), frobenius_code(code, l).generator());
      if (inter.rows() != 4 - static_cast<std::size_t>(l) || rank(inter) != inter.rows()) continue;
      try {
        const VecFqm g = recover_generating_vector(inter);
        ok += scalar_multiple(code.generating_vector().frobenius(l), g).has_value();
      } catch (const Error&) {
      }
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " (20 codes x l=1..3)"};
}

// 6. Decoder agrees with brute force.
Outcome decoder() {
  Rng rng(0xdec0de);
  const Field f = Field::with_degree(6);
  int agree = 0;
  for (int i = 0; i < 500; ++i) {
    const GabidulinCode code(random_vector_of_rank(f, 6, 6, rng), 2);
    const VecFqm y = code.encode(random_vector(f, 2, rng)) + random_vector_of_rank(f, 6, rng.below(3), rng);
    try {
      const auto expect = oracle::brute_force_decode(code, y);
      const auto got = decode(code, y);
      agree += got.codeword == expect.codeword && got.message == expect.message;
    } catch (const Error&) {
    }
  }
  return {agree == 500, std::to_string(agree) + "/500 agree"};
}

// 7. End-to-end decryption with the recovered key.
Outcome end_to_end() {
  Rng rng(0xe2e);
  const KeyPair kp = keygen(LauTanParams::make(22, 18, 9), rng);
  const RecoveredKey rec = full_attack(kp.pk);
  int ok = 0;
  for (int i = 0; i < 50; ++i) {
    const VecFqm msg = random_vector(kp.pk.field, 4, rng);
    const Ciphertext ct = encrypt(kp.pk, msg, rng);
    try {
      const VecFqm with_rec = decrypt(rec.key, kp.pk, ct);
      const VecFqm with_true = decrypt(kp.sk, kp.pk, ct);
      ok += with_rec == with_true && with_true == msg;
    } catch (const Error&) {
    }
  }
  return {ok == 50, std::to_string(ok) + "/50 plaintexts"};
}

// 8. Expansion preserves solution sets.
Outcome expansion() {
  Rng rng(0xe8a);
  int ok = 0;
  for (int i = 0; i < 200; ++i) {
    const Field f = Field::with_degree(2 + static_cast<int>(rng.below(3)));
    const MatFqm coeff = random_matrix(f, 1 + rng.below(4), 1 + rng.below(6), rng);
    const BasisVector b = i % 2 ? BasisVector::polynomial(f) : BasisVector::normal(f, find_normal_element(f, rng));
    ok += oracle::exhaustive_system_solutions(expand_system(coeff, b)) == oracle::exhaustive_ext_solutions(coeff);
  }
  return {ok == 200, std::to_string(ok) + "/200 systems"};
}

// 9. Cir_k(a) = Mr_k(a) for normal basis vectors.
Outcome circulant() {
  Rng rng(0xc14);
  int ok = 0, total = 0;
  for (int m : {4, 6, 8}) {
    const Field f = Field::with_degree(m);
    for (int i = 0; i < 50; ++i) {
      ++total;
      const VecFqm a(f, BasisVector::normal(f, find_normal_element(f, rng)).elements());
      bool all = true;
      for (std::size_t k = 1; k <= static_cast<std::size_t>(m); ++k) all = all && partial_circulant(a, k) == moore_matrix(a, k);
      ok += all;
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " vectors (all k)"};
}

// 10. Property suites and serialization.
Outcome properties() {
  Rng rng(0x9409);
  constexpr std::size_t kN = 1000;
  const std::size_t bad[] = {props::moore_sum(kN, rng), props::moore_times_base(kN, rng),
                             props::moore_factorization(kN, rng), props::moore_full_rank(kN, rng),
                             props::moore_in_code_spans(kN, rng)};
  std::size_t failures = 0;
  for (std::size_t b : bad) failures += b;

  int io_ok = 0;
  constexpr int kIo = 30;
  for (int i = 0; i < kIo; ++i) {
    const int m = 6 + static_cast<int>(rng.below(30));
    const std::size_t n = 4 + rng.below(static_cast<std::uint64_t>(m) - 4);
    const std::size_t k = 2 + rng.below(n - 2);
    const KeyPair kp = keygen(LauTanParams::make(m, n, k), rng);
    const std::string pk = io::write_public_key(kp.pk), sk = io::write_private_key(kp.sk);
    const VecFqm msg = random_vector(kp.pk.field, k / 2, rng);
    const std::string ct = io::write_ciphertext(encrypt(kp.pk, msg, rng), k);
    const std::string ms = io::write_message(msg);
    bool ok = io::write_public_key(io::read_public_key(pk)) == pk && io::write_private_key(io::read_private_key(sk)) == sk &&
              io::write_ciphertext(io::read_ciphertext(ct), k) == ct &&
              io::write_message(io::read_message(ms, kp.pk.field)) == ms;
    RecoveredKey rec{kp.sk, {}};
    rec.diagnostics.nullspace_dim = static_cast<std::size_t>(m);
    rec.diagnostics.attempts = 1;
    const std::string rk = io::write_recovered_key(rec);
    ok = ok && io::write_recovered_key(io::read_recovered_key(rk)) == rk;
    io_ok += ok;
  }
  std::ostringstream detail;
  detail << "failures per suite (of " << kN << "): sum " << bad[0] << ", xQ " << bad[1] << ", factor " << bad[2]
         << ", rank " << bad[3] << ", in-code span " << bad[4] << "; serialization " << io_ok << "/" << kIo;
  return {failures == 0 && io_ok == kIo, detail.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"attack success at the benchmark sizes, 20 trials each", table1},
      {"nullspace dimension m at (25,23,10), 100 trials", assumption},
      {"generating-vector census at (4,4,2)", census},
      {"minimum rank distance n-k+1", min_distance},
      {"intersection law at (8,7,4), l=1..3", intersection},
      {"decoder == brute force at (6,6,2), 500 pairs", decoder},
      {"end-to-end break at (22,18,9), 50 plaintexts", end_to_end},
      {"subfield expansion preserves solutions, 200 systems", expansion},
      {"Cir_k(a) = Mr_k(a) for normal a, m in {4,6,8}", circulant},
      {"Moore property suites x1000 and byte-exact serialization", properties},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out{false, ""};
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.detail = std::string("exception: ") + e.what();
    }
    failed += !out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << " [" << index << "] " << c.name << " -- " << out.detail << " ("
              << fmt("%.1f", ms_since(t0) / 1000.0) << "s)" << std::endl;
  }
  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
