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

#include "rankbreak/oracle.hpp"

#include <algorithm>
#include <bit>

#include "rankbreak/error.hpp"

namespace rankbreak::oracle {

namespace {

void check_tiny(const GabidulinCode& code) {
  const int m = code.field().degree();
  require(m <= kMaxDegree, "oracle needs m <= 6");
  require(static_cast<int>(code.k()) * m <= kMaxMessageBits, "oracle needs q^(mk) <= 2^18");
}

// Visits every (message, codeword) pair in Gray-code order. Codewords are
// built from c_t = sum_b msg_b * g_t^(2^b), with the power taken directly.
template <typename Visit>
void for_each_codeword(const GabidulinCode& code, Visit&& visit) {
  const Field& f = code.field();
  const int m = f.degree();
  const std::size_t n = code.n(), k = code.k();
  const auto& g = code.generating_vector();
  const int bits = m * static_cast<int>(k);

  std::vector<std::vector<Word>> unit(static_cast<std::size_t>(bits), std::vector<Word>(n));
  for (std::size_t b = 0; b < k; ++b) {
    for (int i = 0; i < m; ++i) {
      for (std::size_t t = 0; t < n; ++t) {
        const Word power = f.pow(g[t], std::uint64_t{1} << b);
        unit[b * m + static_cast<std::size_t>(i)][t] = f.mul(Word{1} << i, power);
      }
    }
  }
  std::vector<Word> msg(k, 0), cw(n, 0);
  visit(msg, cw);
  const std::uint64_t total = std::uint64_t{1} << bits;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    const int bit = std::countr_zero(idx);
    msg[static_cast<std::size_t>(bit / m)] ^= Word{1} << (bit % m);
    for (std::size_t t = 0; t < n; ++t) cw[t] ^= unit[static_cast<std::size_t>(bit)][t];
    visit(msg, cw);
  }
}

std::uint64_t pack(std::span<const Word> v, int m) {
  std::uint64_t key = 0;
  for (std::size_t t = 0; t < v.size(); ++t) key |= v[t] << (t * static_cast<std::size_t>(m));
  return key;
}

}  // namespace

int span_rank(const Field& field, std::span<const Word> elems) {
  require(field.degree() <= kMaxDegree, "span_rank needs m <= 6");
  std::uint64_t seen = 1;  // {0}
  for (Word e : elems) {
    std::uint64_t next = seen;
    for (int x = 0; x < 64; ++x) {
      if ((seen >> x) & 1) next |= std::uint64_t{1} << (static_cast<Word>(x) ^ e);
    }
    seen = next;
  }
  return std::countr_zero(static_cast<std::uint64_t>(std::popcount(seen)));
}

NearestCodeword brute_force_decode(const GabidulinCode& code, const VecFqm& received) {
  check_tiny(code);
  const Field& f = code.field();
  require(received.field() == f && received.size() == code.n(), "received word does not match code");
  int best = code.field().degree() + 1;
  int ties = 0;
  std::vector<Word> best_msg, best_cw;
  std::vector<Word> diff(code.n());
  for_each_codeword(code, [&](const std::vector<Word>& msg, const std::vector<Word>& cw) {
    for (std::size_t t = 0; t < cw.size(); ++t) diff[t] = cw[t] ^ received[t];
    const int d = span_rank(f, diff);
    if (d < best) {
      best = d;
      ties = 1;
      best_msg = msg;
      best_cw = cw;
    } else if (d == best) {
      ++ties;
    }
  });
  if (ties > 1) fail(ErrorKind::oracle_tie, "nearest codeword at distance " + std::to_string(best) + " is not unique");
  return {VecFqm(f, best_msg), VecFqm(f, best_cw), best};
}

std::vector<VecFqm> enumerate_generating_vectors(const GabidulinCode& code) {
  check_tiny(code);
  const Field& f = code.field();
  const int m = f.degree();
  const std::size_t n = code.n(), k = code.k();
  require(n * static_cast<std::size_t>(m) <= 64, "oracle needs n*m <= 64");

  std::vector<std::uint64_t> keys;
  std::vector<std::vector<Word>> full_rank;
  for_each_codeword(code, [&](const std::vector<Word>&, const std::vector<Word>& cw) {
    keys.push_back(pack(cw, m));
    if (span_rank(f, cw) == static_cast<int>(n)) full_rank.push_back(cw);
  });
  std::sort(keys.begin(), keys.end());
  auto in_code = [&](const std::vector<Word>& v) { return std::binary_search(keys.begin(), keys.end(), pack(v, m)); };

  std::vector<VecFqm> out;
  for (const auto& v : full_rank) {
    // Rows v^[0..k-1] must be codewords ...
    std::vector<std::vector<Word>> rows{v};
    bool ok = true;
    for (std::size_t i = 1; i < k && ok; ++i) {
      std::vector<Word> next(n);
      for (std::size_t t = 0; t < n; ++t) next[t] = f.mul(rows.back()[t], rows.back()[t]);
      ok = in_code(next);
      rows.push_back(std::move(next));
    }
    if (!ok) continue;
    // ... and independent over GF(2^m): no nonzero combination vanishes.
    const std::uint64_t combos = std::uint64_t{1} << (static_cast<std::size_t>(m) * k);
    for (std::uint64_t lam = 1; lam < combos && ok; ++lam) {
      bool zero = true;
      for (std::size_t t = 0; t < n && zero; ++t) {
        Word acc = 0;
        for (std::size_t i = 0; i < k; ++i) {
          const Word coef = (lam >> (i * static_cast<std::size_t>(m))) & f.mask();
          acc ^= f.mul(coef, rows[i][t]);
        }
        zero = acc == 0;
      }
      if (zero) ok = false;
    }
    if (ok) out.emplace_back(f, v);
  }
  return out;
}

int min_rank_distance(const GabidulinCode& code) {
  check_tiny(code);
  int best = code.field().degree() + 1;
  for_each_codeword(code, [&](const std::vector<Word>&, const std::vector<Word>& cw) {
    const int d = span_rank(code.field(), cw);
    if (d > 0) best = std::min(best, d);
  });
  return best;
}

std::vector<std::uint32_t> exhaustive_system_solutions(const LinearSystemFq& system) {
  const std::size_t nvars = system.nvars();
  require(nvars <= kMaxVars, "exhaustive solving needs at most 20 unknowns");
  std::vector<std::uint32_t> out;
  const std::uint32_t total = std::uint32_t{1} << nvars;
  for (std::uint32_t x = 0; x < total; ++x) {
    bool ok = true;
    for (std::size_t r = 0; r < system.equations() && ok; ++r) {
      unsigned parity = 0;
      for (std::size_t j = 0; j < nvars; ++j) parity ^= system.coeff.get(r, j) & ((x >> j) & 1);
      ok = parity == 0;
    }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<std::uint32_t> exhaustive_ext_solutions(const MatFqm& coeff_ext) {
  const std::size_t nvars = coeff_ext.cols();
  require(nvars <= kMaxVars, "exhaustive solving needs at most 20 unknowns");
  std::vector<std::uint32_t> out;
  const std::uint32_t total = std::uint32_t{1} << nvars;
  for (std::uint32_t x = 0; x < total; ++x) {
    bool ok = true;
    for (std::size_t e = 0; e < coeff_ext.rows() && ok; ++e) {
      Word acc = 0;
      for (std::size_t j = 0; j < nvars; ++j) {
        if ((x >> j) & 1) acc ^= coeff_ext(e, j);
      }
      ok = acc == 0;
    }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<std::uint32_t> span_of_rows(const MatFq& basis) {
  require(basis.cols() <= kMaxVars && basis.rows() <= kMaxVars, "span enumeration needs at most 20 rows and columns");
  std::vector<std::uint32_t> rows(basis.rows());
  for (std::size_t r = 0; r < basis.rows(); ++r) rows[r] = basis.cols() == 0 ? 0 : static_cast<std::uint32_t>(basis.row(r)[0]);
  std::vector<std::uint32_t> out;
  const std::uint32_t total = std::uint32_t{1} << basis.rows();
  for (std::uint32_t c = 0; c < total; ++c) {
    std::uint32_t v = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if ((c >> r) & 1) v ^= rows[r];
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rankbreak::oracle
