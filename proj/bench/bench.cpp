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

// Serial reference vs OpenMP kernels at the benchmark sizes: F_2 elimination of
// the expanded attack system and its assembly. Results are checked equal.
//
//   rankbreak_bench [--reps N] [--quick]

#include <omp.h>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <optional>
#include <vector>

#include "rankbreak/attack.hpp"
#include "rankbreak/lautan.hpp"

using namespace rankbreak;

namespace {

template <typename F>
double best_ms(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel kernel timings"};
  int reps = 3;
  bool quick = false;
  app.add_option("--reps", reps, "Repetitions per kernel (best time reported)")->check(CLI::PositiveNumber);
  app.add_flag("--quick", quick, "Only the smallest parameter set, one repetition");
  CLI11_PARSE(app, argc, argv);
  if (quick) reps = 1;

  struct Row {
    int m;
    std::size_t n, k;
  };
  std::vector<Row> rows = {{22, 18, 9}, {28, 22, 9}, {35, 26, 12}};
  if (quick) rows.resize(1);

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-14s %-12s %12s %12s %8s %6s\n", "(m,n,k)", "kernel", "serial ms", "parallel ms", "speedup", "equal");
  bool all_equal = true;
  for (const Row& row : rows) {
    Rng rng(derive_seed(0xbe7c4, static_cast<std::uint64_t>(row.m)));
    const KeyPair kp = keygen(LauTanParams::make(row.m, row.n, row.k), rng);
    char label[32];
    std::snprintf(label, sizeof label, "(%d,%zu,%zu)", row.m, row.n, row.k);

    std::optional<AttackSystem> par, ser;
    const double t_ser_asm = best_ms(reps, [&] { ser.emplace(reference::assemble_system(kp.pk)); });
    const double t_par_asm = best_ms(reps, [&] { par.emplace(assemble_system(kp.pk)); });
    const bool asm_eq = ser->expanded.coeff == par->expanded.coeff;

    RrefFq r_ser, r_par;
    const MatFq& a = par->expanded.coeff;
    const double t_ser_rref = best_ms(reps, [&] { r_ser = reference::rref(a); });
    const double t_par_rref = best_ms(reps, [&] { r_par = rref(a); });
    const bool rref_eq = r_ser.reduced == r_par.reduced && r_ser.pivots == r_par.pivots;

    std::printf("%-14s %-12s %12.3f %12.3f %8.2f %6s\n", label, "assemble", t_ser_asm, t_par_asm, t_ser_asm / t_par_asm,
                asm_eq ? "yes" : "NO");
    std::printf("%-14s %-12s %12.3f %12.3f %8.2f %6s\n", label, "rref", t_ser_rref, t_par_rref,
                t_ser_rref / t_par_rref, rref_eq ? "yes" : "NO");
    std::printf("%-14s system %zu x %zu, rank %zu\n", label, a.rows(), a.cols(), r_par.rank());
    all_equal = all_equal && asm_eq && rref_eq;
  }
  return all_equal ? 0 : 1;
}
