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

#include "rankbreak/attack.hpp"

#include <chrono>
#include <optional>

#include "rankbreak/error.hpp"
#include "rankbreak/rankcode.hpp"

namespace rankbreak {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

BasisVector make_basis(const Field& f, BasisKind kind) {
  switch (kind) {
    case BasisKind::normal: return BasisVector::normal(f, canonical_normal_element(f));
    case BasisKind::polynomial: return BasisVector::polynomial(f);
    case BasisKind::other: break;
  }
  fail(ErrorKind::invalid_input, "attack basis must be normal or polynomial");
}

MatFqm attack_moore(const BasisVector& basis, std::size_t rows) {
  const VecFqm a(basis.field(), basis.elements());
  // For a normal basis the Moore matrix is the partial circulant, no Frobenius needed.
  return basis.kind() == BasisKind::normal ? partial_circulant(a, rows) : moore_matrix(a, rows);
}

void check_public_key(const PublicKey& pk) {
  const std::size_t n = pk.n();
  require(pk.u.field() == pk.field && pk.g_pub.field() == pk.field, "public key field mismatch");
  require(pk.k >= 1 && pk.k < n && n <= static_cast<std::size_t>(pk.field.degree()), "public key needs k < n <= m");
  require(pk.g_pub.rows() == pk.k && pk.g_pub.cols() == n, "G_pub must be k x n");
}

std::vector<VarLabel> attack_labels(std::size_t m, std::size_t n) {
  std::vector<VarLabel> labels;
  labels.reserve(2 * m * n);
  for (char name : {'X', 'Y'}) {
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t t = 0; t < n; ++t) labels.push_back({name, s, t});
    }
  }
  return labels;
}

// Returns T* if (X, Y) passes every check, nullopt otherwise.
std::optional<MatFq> try_candidate(const PublicKey& pk, const MatFqm& u_mat, const MatFq& sol, std::size_t row,
                                   std::size_t m, std::size_t n) {
  MatFq x(m, n), y(m, n);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      x.set(s, t, sol.get(row, s * n + t));
      y.set(s, t, sol.get(row, m * n + s * n + t));
    }
  }
  // n independent rows of X, read off the pivots of X^T.
  const RrefFq xt = rref(x.transpose());
  if (xt.rank() != n) return std::nullopt;
  const auto x_inv = inverse(x.select_rows(xt.pivots));
  if (!x_inv) return std::nullopt;
  const MatFq t_transposed = *x_inv * y.select_rows(xt.pivots);
  if (!(x * t_transposed == y)) return std::nullopt;
  MatFq t_star = t_transposed.transpose();
  if (!inverse(t_star)) return std::nullopt;

  const MatFqm sg = pk.g_pub + u_mat * t_star;
  try {
    const VecFqm g = recover_generating_vector(sg);
    if (!generates(g, sg)) return std::nullopt;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::not_gabidulin) throw;
    return std::nullopt;
  }
  return t_star;
}

AttackSystem make_system_shell(const PublicKey& pk, const AttackOptions& opts) {
  check_public_key(pk);
  const std::size_t m = static_cast<std::size_t>(pk.field.degree());
  const std::size_t n = pk.n();
  const std::size_t k = pk.k;
  BasisVector basis = make_basis(pk.field, opts.basis);
  MatFqm moore = attack_moore(basis, n - k);
  return AttackSystem{LinearSystemFq{}, std::move(moore), std::move(basis), m, n, k};
}

}  // namespace

AttackSystem assemble_system(const PublicKey& pk, const AttackOptions& opts) {
  AttackSystem sys = make_system_shell(pk, opts);
  const Field& f = pk.field;
  const std::size_t m = sys.m, n = sys.n, k = sys.k, r = n - k;
  const MatFqm u_mat = pk.circulant();
  const MatFqm& moore = sys.moore;

  // Equation (i, j): coefficient of X[s][t] is G_pub[i][t] M[j][s], of
  // Y[s][t] is U[i][t] M[j][s] (signs vanish in characteristic 2).
  MatFqm coeff(f, k * r, 2 * m * n);
  const long long neq = static_cast<long long>(k * r);
#pragma omp parallel for schedule(static)
  for (long long e = 0; e < neq; ++e) {
    const std::size_t i = static_cast<std::size_t>(e) / r;
    const std::size_t j = static_cast<std::size_t>(e) % r;
    auto row = coeff.row_span(static_cast<std::size_t>(e));
    for (std::size_t s = 0; s < m; ++s) {
      const Word mjs = moore(j, s);
      for (std::size_t t = 0; t < n; ++t) {
        row[s * n + t] = f.mul(pk.g_pub(i, t), mjs);
        row[m * n + s * n + t] = f.mul(u_mat(i, t), mjs);
      }
    }
  }
  sys.expanded = expand_system(coeff, BasisVector::polynomial(f));
  sys.expanded.labels = attack_labels(m, n);
  return sys;
}

namespace reference {

AttackSystem assemble_system(const PublicKey& pk, const AttackOptions& opts) {
  AttackSystem sys = make_system_shell(pk, opts);
  const Field& f = pk.field;
  const std::size_t m = sys.m, n = sys.n, k = sys.k, r = n - k;
  const MatFqm u_mat = pk.circulant();
  const MatFqm gx = pk.g_pub;
  MatFqm coeff(f, k * r, 2 * m * n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
          const FieldElement mjs = sys.moore.at(j, s);
          coeff.set(i * r + j, s * n + t, gx.at(i, t) * mjs);
          coeff.set(i * r + j, m * n + s * n + t, u_mat.at(i, t) * mjs);
        }
      }
    }
  }
  sys.expanded = reference::expand_system(coeff, BasisVector::polynomial(f));
  sys.expanded.labels = attack_labels(m, n);
  return sys;
}

}  // namespace reference

TRecovery recover_t(const PublicKey& pk, const AttackOptions& opts) {
  auto start = Clock::now();
  const AttackSystem sys = assemble_system(pk, opts);
  const double t_assemble = ms_since(start);

  start = Clock::now();
  const MatFq basis = solve_homogeneous(sys.expanded);
  const std::size_t dim = basis.rows();
  if (dim == 0) fail(ErrorKind::nullspace_trivial, "expanded system has only the zero solution");

  const MatFqm u_mat = pk.circulant();
  std::size_t attempts = 0;
  for (std::size_t row = 0; row < dim; ++row) {
    ++attempts;
    if (auto t = try_candidate(pk, u_mat, basis, row, sys.m, sys.n)) {
      return {std::move(*t), dim, attempts, t_assemble, ms_since(start)};
    }
  }
  Rng rng(opts.candidate_seed);
  for (std::size_t c = 0; c < opts.max_random_candidates; ++c) {
    MatFq combo(1, basis.cols());
    for (std::size_t row = 0; row < dim; ++row) {
      if (!rng.coin()) continue;
      auto dst = combo.row(0);
      const auto src = basis.row(row);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
    }
    if (combo.row_is_zero(0)) continue;
    ++attempts;
    if (auto t = try_candidate(pk, u_mat, combo, 0, sys.m, sys.n)) {
      return {std::move(*t), dim, attempts, t_assemble, ms_since(start)};
    }
  }
  fail(ErrorKind::assumption_violated,
       "no candidate among " + std::to_string(attempts) + " solutions (nullspace dimension " + std::to_string(dim) +
           ") yields a valid T");
}

RecoveredKey recover_equivalent_key(const PublicKey& pk, const MatFq& t, const AttackOptions& opts) {
  check_public_key(pk);
  require(t.rows() == pk.n() && t.cols() == pk.n(), "T must be n x n");
  const auto start = Clock::now();
  const MatFqm sg = pk.g_pub + pk.circulant() * t;
  RecoveryOptions ropts;
  ropts.basis = opts.basis;
  VecFqm g = recover_generating_vector(sg, ropts);
  MatFqm gen = moore_matrix(g, pk.k);
  auto s = solve_left(gen, sg);
  if (!s || !inverse(*s)) fail(ErrorKind::not_gabidulin, "G_pub - Cir_k(u) T is not spanned by the recovered Moore matrix");
  RecoveredKey out{PrivateKey{std::move(*s), std::move(g), std::move(gen), t}, {}};
  out.diagnostics.t_recover_ms = ms_since(start);
  return out;
}

RecoveredKey full_attack(const PublicKey& pk, const AttackOptions& opts) {
  const auto start = Clock::now();
  TRecovery tr = recover_t(pk, opts);
  RecoveredKey key = recover_equivalent_key(pk, tr.t, opts);
  key.diagnostics.nullspace_dim = tr.nullspace_dim;
  key.diagnostics.attempts = tr.attempts;
  key.diagnostics.t_assemble_ms = tr.t_assemble_ms;
  key.diagnostics.t_solve_ms = tr.t_solve_ms;
  key.diagnostics.t_total_ms = ms_since(start);
  return key;
}

std::size_t attack_nullspace_dim(const PublicKey& pk, const AttackOptions& opts) {
  const AttackSystem sys = assemble_system(pk, opts);
  return sys.expanded.nvars() - rank(sys.expanded.coeff);
}

MatFq pack_solution(const MatFq& x, const MatFq& y) {
  require(x.rows() == y.rows() && x.cols() == y.cols(), "X and Y must have equal shape");
  const std::size_t m = x.rows(), n = x.cols();
  MatFq out(1, 2 * m * n);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      out.set(0, s * n + t, x.get(s, t));
      out.set(0, m * n + s * n + t, y.get(s, t));
    }
  }
  return out;
}

Witness secret_witness(const AttackSystem& sys, const PrivateKey& sk) {
  const GabidulinCode code(sk.g, sk.k());
  const VecFqm h = dual_generating_vector(code);
  const MatFq x = moore_decompose(moore_matrix(h, sys.n - sys.k), sys.moore);
  return {x, x * sk.t.transpose()};
}

}  // namespace rankbreak
