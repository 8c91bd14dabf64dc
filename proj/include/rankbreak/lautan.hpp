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

// The Lau-Tan public-key encryption scheme over Gabidulin codes.
//
//   keygen:  G_pub = S * Mr_k(g) + Cir_k(u) * T,  public (G_pub, u)
//   encrypt: c1 = (m, m_s) Cir_k(u) + e1,  c2 = (m, m_s) G_pub + e2
//   decrypt: decode c2 - c1 T in Gab_{n,k}(g), then undo S

#include <cstddef>
#include <cstdint>
#include <optional>

#include "rankbreak/field.hpp"
#include "rankbreak/matfq.hpp"
#include "rankbreak/matfqm.hpp"
#include "rankbreak/rng.hpp"

namespace rankbreak {

struct LauTanParams {
  int m = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t k_prime = 0;  // floor(k / 2), plaintext length
  std::size_t r = 0;        // error-rank budget, floor((n - k) / 2) by default

  /// Validates m > n > k > floor(k/2) >= 1 and r <= floor((n - k) / 2).
  static LauTanParams make(int m, std::size_t n, std::size_t k);
  static LauTanParams make(int m, std::size_t n, std::size_t k, std::size_t r);

  /// ceil(3 (n - k) / 4); encryption needs rank((m, m_s) U) above this.
  std::size_t mask_rank_threshold() const noexcept { return (3 * (n - k) + 3) / 4; }
  /// Per-error rank floor(r / 2).
  std::size_t error_rank() const noexcept { return r / 2; }

  friend bool operator==(const LauTanParams&, const LauTanParams&) = default;
};

struct PublicKey {
  Field field;
  std::size_t k;
  MatFqm g_pub;  // k x n
  VecFqm u;      // rank weight n

  std::size_t n() const noexcept { return u.size(); }
  /// Cir_k(u)
  MatFqm circulant() const;
};

/// Private key (S, G, T) together with the generating vector g of G. An
/// equivalent key recovered by the attack has the same shape.
struct PrivateKey {
  MatFqm s;  // k x k, invertible
  VecFqm g;
  MatFqm gen;  // Mr_k(g)
  MatFq t;     // n x n over F_2, invertible

  std::size_t k() const noexcept { return s.rows(); }
  std::size_t n() const noexcept { return g.size(); }
};

struct KeyPair {
  LauTanParams params;
  PublicKey pk;
  PrivateKey sk;
};

struct Ciphertext {
  VecFqm c1;
  VecFqm c2;
  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

/// Everything sampled during one encryption, for tests and diagnostics.
struct EncryptionTrace {
  Ciphertext ct;
  VecFqm full_message;  // (m, m_s)
  VecFqm e1;
  VecFqm e2;
  std::size_t mask_attempts;
};

struct EncryptOptions {
  /// Test hook: sample e1 = e2 = 0.
  bool zero_error = false;
  /// Resamples of m_s before giving up.
  std::size_t max_mask_attempts = 1000;
  /// Error-rank budget r; each error gets rank floor(r/2). Defaults to floor((n-k)/2).
  std::optional<std::size_t> rank_budget;
};

KeyPair keygen(const LauTanParams& params, Rng& rng);

/// Throws ErrorKind::constraint_unsatisfiable when no m_s meets the rank
/// constraint within max_mask_attempts draws.
EncryptionTrace encrypt_traced(const PublicKey& pk, const VecFqm& msg, Rng& rng, const EncryptOptions& opts = {});
Ciphertext encrypt(const PublicKey& pk, const VecFqm& msg, Rng& rng, const EncryptOptions& opts = {});

/// Returns the k' = floor(k/2) plaintext entries. Throws
/// ErrorKind::decoding_failure for ciphertexts the key cannot decode.
VecFqm decrypt(const PrivateKey& sk, const PublicKey& pk, const Ciphertext& ct);
/// Same, without cross-checking against the public key.
VecFqm decrypt(const PrivateKey& sk, const Ciphertext& ct);

}  // namespace rankbreak
