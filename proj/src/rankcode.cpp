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

#include "rankbreak/rankcode.hpp"

#include <algorithm>
#include <bit>

#include "rankbreak/error.hpp"

namespace rankbreak {

int rank_weight(const VecFqm& v) { return word_rank(v.elems()); }

std::vector<Word> rank_support(const VecFqm& v) {
  Word basis[64] = {};
  for (Word x : v.elems()) {
    while (x != 0) {
      const int lead = 63 - std::countl_zero(x);
      if (basis[lead] == 0) {
        basis[lead] = x;
        break;
      }
      x ^= basis[lead];
    }
  }
  // Clear every pivot bit from the other basis vectors.
  for (int i = 0; i < 64; ++i) {
    if (basis[i] == 0) continue;
    for (int j = i + 1; j < 64; ++j) {
      if ((basis[j] >> i) & 1) basis[j] ^= basis[i];
    }
  }
  std::vector<Word> out;
  for (int i = 63; i >= 0; --i) {
    if (basis[i] != 0) out.push_back(basis[i]);
  }
  return out;
}

RankFactorization rank_factorization(const VecFqm& a) {
  const std::size_t n = a.size();
  struct Entry {
    Word vec;
    Word combo;  // over chosen components
  };
  std::vector<Entry> basis;
  std::vector<Word> chosen;
  std::vector<std::size_t> chosen_pos;
  std::vector<Word> combos(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    Word v = a[t];
    Word combo = 0;
    for (const auto& e : basis) {
      const int lead = 63 - std::countl_zero(e.vec);
      if ((v >> lead) & 1) {
        v ^= e.vec;
        combo ^= e.combo;
      }
    }
    if (v == 0) {
      combos[t] = combo;
      continue;
    }
    const std::size_t idx = chosen.size();
    chosen.push_back(a[t]);
    chosen_pos.push_back(t);
    combos[t] = Word{1} << idx;
    basis.push_back({v, combo ^ (Word{1} << idx)});
    // Keep entries sorted by leading bit, highest first, for the reduction order.
    std::sort(basis.begin(), basis.end(), [](const Entry& x, const Entry& y) { return x.vec > y.vec; });
  }
  const std::size_t l = chosen.size();
  MatFq q(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t i = 0; i < l; ++i) q.set(i, t, (combos[t] >> i) & 1);
  }
  std::vector<bool> is_chosen(n, false);
  for (std::size_t p : chosen_pos) is_chosen[p] = true;
  std::size_t row = l;
  for (std::size_t t = 0; t < n; ++t) {
    if (!is_chosen[t]) q.set(row++, t, true);
  }
  return {VecFqm(a.field(), std::move(chosen)), std::move(q)};
}

MatFqm moore_matrix(const VecFqm& a, std::size_t k) {
  require(k >= 1, "moore_matrix needs k >= 1");
  const Field& f = a.field();
  MatFqm out(f, k, a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    Word x = a[j];
    for (std::size_t i = 0; i < k; ++i) {
      out(i, j) = x;
      x = f.sqr(x);
    }
  }
  return out;
}

bool is_moore(const MatFqm& a) {
  const Field& f = a.field();
  for (std::size_t i = 1; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != f.sqr(a(i - 1, j))) return false;
    }
  }
  return true;
}

MatFqm partial_circulant(const VecFqm& a, std::size_t k) {
  const std::size_t n = a.size();
  require(k >= 1 && k <= n, "partial_circulant needs 1 <= k <= n");
  MatFqm out(a.field(), k, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a[(j + n - i) % n];
  }
  return out;
}

MatFq moore_decompose(const MatFqm& target, const MatFqm& basis_moore) {
  require(target.field() == basis_moore.field(), "moore_decompose: field mismatch");
  require(is_moore(target) && is_moore(basis_moore), "moore_decompose: inputs must be Moore matrices");
  require(target.rows() == basis_moore.rows() && target.rows() >= 1, "moore_decompose: row count mismatch");
  const Field& f = target.field();
  const auto first = basis_moore.row(0);
  require(basis_moore.cols() == static_cast<std::size_t>(f.degree()), "moore_decompose: basis row must have m entries");
  const auto basis = BasisVector::from_elements(f, std::vector<Word>(first.elems().begin(), first.elems().end()));
  const std::size_t m = basis_moore.cols();
  MatFq q(m, target.cols());
  for (std::size_t t = 0; t < target.cols(); ++t) {
    const Word coords = basis.expand(target(0, t));
    for (std::size_t s = 0; s < m; ++s) q.set(s, t, (coords >> s) & 1);
  }
  return q;
}

VecFqm random_vector_of_rank(const Field& field, std::size_t n, std::size_t r, Rng& rng) {
  require(r <= n && r <= static_cast<std::size_t>(field.degree()), "requested rank exceeds min(n, m)");
  VecFqm out(field, n);
  if (r == 0) return out;
  const MatFq elems = random_full_rank(r, static_cast<std::size_t>(field.degree()), rng);
  const MatFq mix = random_full_rank(r, n, rng);
  for (std::size_t i = 0; i < r; ++i) {
    const Word e = elems.row(i)[0];
    for (std::size_t t = 0; t < n; ++t) {
      if (mix.get(i, t)) out[t] ^= e;
    }
  }
  return out;
}

GabidulinCode::GabidulinCode(VecFqm g, std::size_t k)
    : g_(std::move(g)), k_(k), generator_(g_.field(), 0, 0) {
  const std::size_t n = g_.size();
  require(k >= 1 && k <= n && n <= static_cast<std::size_t>(g_.field().degree()),
          "Gabidulin code needs 1 <= k <= n <= m");
  require(rank_weight(g_) == static_cast<int>(n), "generating vector must have rank weight n");
  generator_ = moore_matrix(g_, k);
}

VecFqm GabidulinCode::encode(const VecFqm& msg) const {
  require(msg.size() == k_, "message length must equal k");
  return msg * generator_;
}

namespace {

// Coefficient d of V o f, i.e. sum_{a+b=d} v_a f_b^[a].
Word composed_coeff(const Field& f, const std::vector<Word>& v, const std::vector<Word>& fc, std::size_t d) {
  Word acc = 0;
  for (std::size_t a = 0; a < v.size() && a <= d; ++a) {
    const std::size_t b = d - a;
    if (b < fc.size() && v[a] != 0 && fc[b] != 0) acc ^= f.mul(v[a], f.frobenius(fc[b], static_cast<long long>(a)));
  }
  return acc;
}

}  // namespace

DecodeResult decode(const GabidulinCode& code, const VecFqm& received) {
  const Field& f = code.field();
  require(received.field() == f && received.size() == code.n(), "received word does not match code");
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const std::size_t t = code.correctable();
  const std::size_t nv = t + 1;
  const std::size_t nn = k + t;
  const auto& g = code.generating_vector();

  // Row i: V(y_i) + N(g_i) = 0 in the coefficients of V and N.
  MatFqm sys(f, n, nv + nn);
  for (std::size_t i = 0; i < n; ++i) {
    Word y = received[i];
    for (std::size_t a = 0; a < nv; ++a, y = f.sqr(y)) sys(i, a) = y;
    Word x = g[i];
    for (std::size_t b = 0; b < nn; ++b, x = f.sqr(x)) sys(i, nv + b) = x;
  }
  const MatFqm kernel = right_nullspace_basis(sys);
  if (kernel.rows() == 0) fail(ErrorKind::decoding_failure, "reconstruction system has no nonzero solution");

  const auto sol = kernel.row(0);
  std::vector<Word> v(sol.elems().begin(), sol.elems().begin() + static_cast<std::ptrdiff_t>(nv));
  std::vector<Word> num(sol.elems().begin() + static_cast<std::ptrdiff_t>(nv), sol.elems().end());
  std::size_t dv = nv;
  while (dv > 0 && v[dv - 1] == 0) --dv;
  if (dv == 0) fail(ErrorKind::decoding_failure, "error-span polynomial vanished");
  --dv;  // q-degree of V
  v.resize(dv + 1);

  // Left division N = V o f, top coefficient first.
  std::vector<Word> fc(k, 0);
  const Word lead_inv = f.inv(v[dv]);
  for (std::size_t b = k; b-- > 0;) {
    const std::size_t d = dv + b;
    Word acc = num[d];
    for (std::size_t a = 0; a < dv; ++a) {
      const std::size_t idx = d - a;
      if (idx < k && fc[idx] != 0) acc ^= f.mul(v[a], f.frobenius(fc[idx], static_cast<long long>(a)));
    }
    fc[b] = f.frobenius(f.mul(acc, lead_inv), -static_cast<long long>(dv));
  }
  for (std::size_t d = 0; d < nn; ++d) {
    if (composed_coeff(f, v, fc, d) != num[d]) fail(ErrorKind::decoding_failure, "division left a remainder");
  }

  VecFqm message(f, std::move(fc));
  VecFqm codeword = code.encode(message);
  VecFqm error = received - codeword;
  if (static_cast<std::size_t>(rank_weight(error)) > t) {
    fail(ErrorKind::decoding_failure, "no codeword within rank distance " + std::to_string(t));
  }
  return {std::move(message), std::move(codeword), std::move(error)};
}

GeneratingVectorRecovery recover_generating_vector_detailed(const MatFqm& generator, const RecoveryOptions& opts) {
  const Field& f = generator.field();
  const std::size_t k = generator.rows();
  const std::size_t n = generator.cols();
  const std::size_t m = static_cast<std::size_t>(f.degree());
  require(k >= 1 && k < n && n <= m, "generating-vector recovery needs 1 <= k < n <= m");
  require(rank(generator) == k, "generator matrix must have full row rank");

  const MatFqm h = right_nullspace_basis(generator);
  const BasisVector basis = opts.basis == BasisKind::normal ? BasisVector::normal(f, canonical_normal_element(f))
                                                            : BasisVector::polynomial(f);
  const VecFqm a(f, basis.elements());
  const MatFqm moore = moore_matrix(a, k);

  // Equation (i, j): sum_{s,t} M[i,s] H[j,t] X[s,t] = 0, X flattened row-major.
  MatFqm coeff(f, k * h.rows(), m * n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < h.rows(); ++j) {
      auto row = coeff.row_span(i * h.rows() + j);
      for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t t = 0; t < n; ++t) row[s * n + t] = f.mul(moore(i, s), h(j, t));
      }
    }
  }
  LinearSystemFq sys = expand_system(coeff, BasisVector::polynomial(f));
  const MatFq solutions = solve_homogeneous(sys);
  if (solutions.rows() == 0) fail(ErrorKind::not_gabidulin, "no Moore-shaped generator fits the code");

  VecFqm g(f, n);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (solutions.get(0, s * n + t)) g[t] ^= a[s];
    }
  }
  return {std::move(g), solutions.rows()};
}

VecFqm recover_generating_vector(const MatFqm& generator, const RecoveryOptions& opts) {
  return recover_generating_vector_detailed(generator, opts).g;
}

VecFqm dual_generating_vector(const GabidulinCode& code) {
  require(code.k() < code.n(), "dual of a full-length code is trivial");
  return recover_generating_vector(right_nullspace_basis(code.generator()));
}

GabidulinCode frobenius_code(const GabidulinCode& code, long long l) {
  return GabidulinCode(code.generating_vector().frobenius(l), code.k());
}

MatFqm code_intersection(const MatFqm& c1, const MatFqm& c2) {
  require(c1.field() == c2.field() && c1.cols() == c2.cols(), "code_intersection: mismatch");
  const MatFqm stacked = right_nullspace_basis(c1).vstack(right_nullspace_basis(c2));
  return right_nullspace_basis(stacked);
}

bool generates(const VecFqm& g, const MatFqm& generator) {
  if (g.field() != generator.field() || g.size() != generator.cols() || generator.rows() == 0) return false;
  return same_row_space(moore_matrix(g, generator.rows()), generator);
}

}  // namespace rankbreak
