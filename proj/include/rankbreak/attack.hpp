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

// Polynomial-time key recovery against Lau-Tan.
//
// With M = Mr_{n-k}(a) for a basis vector a, the secret T satisfies
//   G_pub X^T M^T - Cir_k(u) Y^T M^T = 0,   Y = X T^T,
// for every X with M X a standard parity-check matrix of the secret code.
// Treating X and Y as independent unknowns makes the system linear over
// F_2: m k (n - k) equations in 2 m n unknowns. Any nonzero solution gives T
// from Y = X T^T, after which an equivalent (S', G') follows from
// generating-vector recovery on G_pub - Cir_k(u) T.

#include <cstddef>
#include <cstdint>

#include "rankbreak/field.hpp"
#include "rankbreak/lautan.hpp"
#include "rankbreak/matfq.hpp"
#include "rankbreak/matfqm.hpp"

namespace rankbreak {

struct AttackOptions {
  /// Basis vector generating M. Normal by default, so M = Cir_{n-k}(a).
  BasisKind basis = BasisKind::normal;
  /// Random combinations of nullspace basis vectors tried after the basis
  /// vectors themselves.
  std::size_t max_random_candidates = 64;
  std::uint64_t candidate_seed = 0x5eed5eed5eed5eedULL;
};

/// Expanded linear system. Unknown 0..mn-1 is X[s][t] at s*n + t, unknown
/// mn..2mn-1 is Y[s][t] at mn + s*n + t. F_2 row (i*(n-k) + j)*m + l is
/// coordinate l of equation (i, j).
struct AttackSystem {
  LinearSystemFq expanded;
  MatFqm moore;  // (n-k) x m
  BasisVector basis;
  std::size_t m;
  std::size_t n;
  std::size_t k;
};

AttackSystem assemble_system(const PublicKey& pk, const AttackOptions& opts = {});

struct AttackDiagnostics {
  std::size_t nullspace_dim = 0;
  std::size_t attempts = 0;
  double t_assemble_ms = 0;
  double t_solve_ms = 0;
  double t_recover_ms = 0;
  double t_total_ms = 0;
};

struct TRecovery {
  MatFq t;
  std::size_t nullspace_dim;
  std::size_t attempts;
  double t_assemble_ms;
  double t_solve_ms;
};

/// Throws ErrorKind::nullspace_trivial when the system has only the zero
/// solution, ErrorKind::assumption_violated when no candidate passes
/// verification.
TRecovery recover_t(const PublicKey& pk, const AttackOptions& opts = {});

struct RecoveredKey {
  PrivateKey key;  // (S', g', G' = Mr_k(g'), T)
  AttackDiagnostics diagnostics;
};

/// Algorithm for (S', G') given T. Throws ErrorKind::not_gabidulin when
/// G_pub - Cir_k(u) T does not span a Gabidulin code.
RecoveredKey recover_equivalent_key(const PublicKey& pk, const MatFq& t, const AttackOptions& opts = {});

RecoveredKey full_attack(const PublicKey& pk, const AttackOptions& opts = {});

/// F_2 dimension of the solution space of the expanded system.
std::size_t attack_nullspace_dim(const PublicKey& pk, const AttackOptions& opts = {});

/// Solution (X, Y) packed as one length-2mn row in the system's variable order.
MatFq pack_solution(const MatFq& x, const MatFq& y);

/// The solution built from the private key: M X = Mr_{n-k}(h) for a
/// generating vector h of the dual code, and Y = X T^T.
struct Witness {
  MatFq x;
  MatFq y;
};
Witness secret_witness(const AttackSystem& sys, const PrivateKey& sk);

namespace reference {
/// Entry-by-entry serial assembly, for checking the parallel kernel.
AttackSystem assemble_system(const PublicKey& pk, const AttackOptions& opts = {});
}  // namespace reference

}  // namespace rankbreak
