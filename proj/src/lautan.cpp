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

#include "rankbreak/lautan.hpp"

#include "rankbreak/error.hpp"
#include "rankbreak/rankcode.hpp"

namespace rankbreak {

LauTanParams LauTanParams::make(int m, std::size_t n, std::size_t k) {
  require(n > k, "parameters need n > k");
  return make(m, n, k, (n - k) / 2);
}

LauTanParams LauTanParams::make(int m, std::size_t n, std::size_t k, std::size_t r) {
  require(m >= Field::kMinDegree && m <= Field::kMaxDegree, "m must be in [2, 64]");
  require(static_cast<std::size_t>(m) > n, "parameters need m > n");
  require(n > k, "parameters need n > k");
  require(k / 2 >= 1, "parameters need floor(k/2) >= 1");
  require(r <= (n - k) / 2, "parameters need r <= floor((n-k)/2)");
  return {m, n, k, k / 2, r};
}

MatFqm PublicKey::circulant() const { return partial_circulant(u, k); }

KeyPair keygen(const LauTanParams& params, Rng& rng) {
  const Field field = Field::with_degree(params.m);
  const std::size_t n = params.n;
  const std::size_t k = params.k;

  VecFqm g = random_vector_of_rank(field, n, n, rng);
  MatFqm gen = moore_matrix(g, k);
  MatFqm s = random_invertible_ext(field, k, rng);
  MatFq t = random_invertible(n, rng);
  VecFqm u = random_vector_of_rank(field, n, n, rng);
  MatFqm g_pub = s * gen + partial_circulant(u, k) * t;

  return {params, PublicKey{field, k, std::move(g_pub), std::move(u)},
          PrivateKey{std::move(s), std::move(g), std::move(gen), std::move(t)}};
}

EncryptionTrace encrypt_traced(const PublicKey& pk, const VecFqm& msg, Rng& rng, const EncryptOptions& opts) {
  const Field& f = pk.field;
  const std::size_t n = pk.n();
  const std::size_t k = pk.k;
  const std::size_t k_prime = k / 2;
  require(msg.field() == f && msg.size() == k_prime, "plaintext must have floor(k/2) entries of the key's field");

  const std::size_t threshold = (3 * (n - k) + 3) / 4;
  const std::size_t budget = opts.rank_budget.value_or((n - k) / 2);
  require(budget <= (n - k) / 2, "error-rank budget exceeds floor((n-k)/2)");
  const std::size_t per_error = budget / 2;
  const MatFqm u_mat = pk.circulant();

  VecFqm full(f, k);
  std::size_t attempts = 0;
  for (;;) {
    if (attempts == opts.max_mask_attempts) {
      fail(ErrorKind::constraint_unsatisfiable,
           "no m_s with rank((m, m_s) U) > " + std::to_string(threshold) + " after " + std::to_string(attempts) +
               " draws");
    }
    ++attempts;
    full = concat(msg, random_vector(f, k - k_prime, rng));
    if (static_cast<std::size_t>(rank_weight(full * u_mat)) > threshold) break;
  }

  const std::size_t r1 = opts.zero_error ? 0 : per_error;
  VecFqm e1 = random_vector_of_rank(f, n, r1, rng);
  VecFqm e2 = random_vector_of_rank(f, n, r1, rng);
  Ciphertext ct{full * u_mat + e1, full * pk.g_pub + e2};
  return {std::move(ct), std::move(full), std::move(e1), std::move(e2), attempts};
}

Ciphertext encrypt(const PublicKey& pk, const VecFqm& msg, Rng& rng, const EncryptOptions& opts) {
  return encrypt_traced(pk, msg, rng, opts).ct;
}

VecFqm decrypt(const PrivateKey& sk, const Ciphertext& ct) {
  const Field& f = sk.g.field();
  const std::size_t n = sk.n();
  require(ct.c1.field() == f && ct.c2.field() == f && ct.c1.size() == n && ct.c2.size() == n,
          "ciphertext does not match key");

  const VecFqm c_prime = ct.c2 - ct.c1 * sk.t;
  const GabidulinCode code(sk.g, sk.k());
  const DecodeResult dec = decode(code, c_prime);
  const auto s_inv = inverse(sk.s);
  require(s_inv.has_value(), "private key S is singular");
  const VecFqm full = dec.message * *s_inv;
  return full.slice(0, sk.k() / 2);
}

VecFqm decrypt(const PrivateKey& sk, const PublicKey& pk, const Ciphertext& ct) {
  require(sk.n() == pk.n() && sk.k() == pk.k && sk.g.field() == pk.field, "private key does not match public key");
  return decrypt(sk, ct);
}

}  // namespace rankbreak
