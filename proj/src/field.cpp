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

#include "rankbreak/field.hpp"

#include <bit>
#include <charconv>

#include "rankbreak/error.hpp"

namespace rankbreak {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid input";
    case ErrorKind::not_gabidulin: return "not Gabidulin";
    case ErrorKind::nullspace_trivial: return "nullspace trivial";
    case ErrorKind::assumption_violated: return "assumption violated";
    case ErrorKind::decoding_failure: return "decoding failure";
    case ErrorKind::constraint_unsatisfiable: return "constraint unsatisfiable";
    case ErrorKind::oracle_tie: return "oracle tie";
  }
  return "unknown error";
}

namespace {

Word low_mask(int m) noexcept { return m >= 64 ? ~Word{0} : ((Word{1} << m) - 1); }

// Shift-and-add multiplication modulo x^m + low.
Word mulmod(Word a, Word b, int m, Word low) noexcept {
  const Word mask = low_mask(m);
  const Word top = Word{1} << (m - 1);
  Word r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    const bool carry = (a & top) != 0;
    a = (a << 1) & mask;
    if (carry) a ^= low;
  }
  return r;
}

using Poly = unsigned __int128;

int poly_degree(Poly p) noexcept {
  const auto hi = static_cast<std::uint64_t>(p >> 64);
  if (hi != 0) return 127 - std::countl_zero(hi);
  const auto lo = static_cast<std::uint64_t>(p);
  return lo == 0 ? -1 : 63 - std::countl_zero(lo);
}

Poly poly_mod(Poly a, Poly b) noexcept {
  const int db = poly_degree(b);
  for (int da = poly_degree(a); da >= db; da = poly_degree(a)) a ^= b << (da - db);
  return a;
}

Poly poly_gcd(Poly a, Poly b) noexcept {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void check_degree(int m) {
  require(m >= Field::kMinDegree && m <= Field::kMaxDegree,
          "field degree must be in [2, 64], got " + std::to_string(m));
}

}  // namespace

bool is_irreducible(int m, Word low) {
  check_degree(m);
  if ((low & ~low_mask(m)) != 0 || (low & 1) == 0) return false;
  // powers[i] = x^(2^i) mod f
  std::vector<Word> powers(m + 1);
  powers[0] = 2;
  for (int i = 1; i <= m; ++i) powers[i] = mulmod(powers[i - 1], powers[i - 1], m, low);
  if (powers[m] != 2) return false;
  Poly f = (Poly{1} << m) | low;
  for (int p : prime_factors(m)) {
    const Poly h = powers[m / p] ^ Word{2};
    if (poly_gcd(f, h) != 1) return false;
  }
  return true;
}

Field::Field(int m, Word low) noexcept : m_(m), low_(low), mask_(low_mask(m)) {}

Field Field::with_degree(int m) {
  check_degree(m);
  for (Word low = 1;; low += 2) {
    if (is_irreducible(m, low)) return Field(m, low);
  }
}

Field Field::with_modulus(int m, Word low) {
  check_degree(m);
  require(is_irreducible(m, low), "modulus is not irreducible");
  return Field(m, low);
}

std::string Field::modulus_hex() const {
  if (m_ < 64) return "0x" + to_hex((Word{1} << m_) | low_);
  std::string digits = to_hex(low_);
  return "0x1" + std::string(16 - digits.size(), '0') + digits;
}

std::string Field::header() const {
  return "q=2 m=" + std::to_string(m_) + " mod=" + modulus_hex();
}

Word Field::mul(Word a, Word b) const noexcept { return mulmod(a, b, m_, low_); }

Word Field::pow(Word a, std::uint64_t e) const noexcept {
  Word r = 1;
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = sqr(a);
    e >>= 1;
  }
  return r;
}

Word Field::inv(Word a) const {
  require(a != 0, "inverse of zero");
  // a^(2^m - 2) = prod_{i=1}^{m-1} a^(2^i)
  Word r = 1;
  Word s = a;
  for (int i = 1; i < m_; ++i) {
    s = sqr(s);
    r = mul(r, s);
  }
  return r;
}

Word Field::frobenius(Word a, long long l) const noexcept {
  long long steps = l % m_;
  if (steps < 0) steps += m_;
  for (long long i = 0; i < steps; ++i) a = sqr(a);
  return a;
}

FieldElement Field::element(Word coords) const { return FieldElement(*this, coords); }
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }
FieldElement Field::generator() const { return FieldElement(*this, 2); }

FieldElement::FieldElement(const Field& field, Word coords) : field_(field), coords_(coords) {
  require(field.contains(coords), "coordinates exceed field degree");
}

namespace {
void same_field(const FieldElement& a, const FieldElement& b) {
  require(a.field() == b.field(), "operands belong to different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  same_field(a, b);
  return FieldElement(a.field_, a.coords_ ^ b.coords_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  same_field(a, b);
  return FieldElement(a.field_, a.field_.mul(a.coords_, b.coords_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  same_field(a, b);
  return FieldElement(a.field_, a.field_.div(a.coords_, b.coords_));
}

FieldElement FieldElement::inv() const { return FieldElement(field_, field_.inv(coords_)); }
FieldElement FieldElement::pow(std::uint64_t e) const { return FieldElement(field_, field_.pow(coords_, e)); }
FieldElement FieldElement::frobenius(long long l) const {
  return FieldElement(field_, field_.frobenius(coords_, l));
}
std::string FieldElement::to_hex() const { return rankbreak::to_hex(coords_); }

std::string to_hex(Word coords) {
  char buf[17];
  auto res = std::to_chars(buf, buf + sizeof buf, coords, 16);
  return std::string(buf, res.ptr);
}

Word parse_hex(std::string_view text, const Field& field) {
  require(!text.empty() && text.size() <= 16, "bad hex element '" + std::string(text) + "'");
  for (char c : text) {
    require((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'), "bad hex element '" + std::string(text) + "'");
  }
  Word value = 0;
  std::from_chars(text.data(), text.data() + text.size(), value, 16);
  require(field.contains(value), "element '" + std::string(text) + "' outside field");
  return value;
}

int word_rank(std::span<const Word> vectors) {
  // Basis indexed by leading bit.
  Word basis[64] = {};
  int rank = 0;
  for (Word v : vectors) {
    while (v != 0) {
      const int lead = 63 - std::countl_zero(v);
      if (basis[lead] == 0) {
        basis[lead] = v;
        ++rank;
        break;
      }
      v ^= basis[lead];
    }
  }
  return rank;
}

BasisVector::BasisVector(const Field& field, BasisKind kind, std::vector<Word> elems)
    : field_(field), kind_(kind), elems_(std::move(elems)) {
  const int m = field.degree();
  require(static_cast<int>(elems_.size()) == m, "basis must have exactly m elements");
  for (Word e : elems_) require(field.contains(e), "basis element outside field");

  // Gauss-Jordan on [B | I], where row i of B is elems_[i] in polynomial
  // coordinates. Afterwards the right half holds B^-1, whose row j gives the
  // basis coordinates of x^j.
  std::vector<Word> left(elems_), right(m);
  for (int i = 0; i < m; ++i) right[i] = Word{1} << i;
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int r = col; r < m; ++r) {
      if ((left[r] >> col) & 1) {
        piv = r;
        break;
      }
    }
    require(piv >= 0, "elements do not form a basis");
    std::swap(left[piv], left[col]);
    std::swap(right[piv], right[col]);
    for (int r = 0; r < m; ++r) {
      if (r != col && ((left[r] >> col) & 1)) {
        left[r] ^= left[col];
        right[r] ^= right[col];
      }
    }
  }
  to_basis_ = std::move(right);
}

BasisVector BasisVector::polynomial(const Field& field) {
  std::vector<Word> elems(field.degree());
  for (int i = 0; i < field.degree(); ++i) elems[i] = Word{1} << i;
  return BasisVector(field, BasisKind::polynomial, std::move(elems));
}

BasisVector BasisVector::normal(const Field& field, Word alpha) {
  const int m = field.degree();
  std::vector<Word> elems(m);
  Word p = alpha;
  for (int i = m - 1; i >= 0; --i) {
    elems[i] = p;
    p = field.sqr(p);
  }
  require(word_rank(elems) == m, "element is not normal");
  return BasisVector(field, BasisKind::normal, std::move(elems));
}

BasisVector BasisVector::from_elements(const Field& field, std::vector<Word> elems) {
  return BasisVector(field, BasisKind::other, std::move(elems));
}

Word BasisVector::expand(Word x) const noexcept {
  Word out = 0;
  while (x != 0) {
    const int j = std::countr_zero(x);
    out ^= to_basis_[j];
    x &= x - 1;
  }
  return out;
}

Word BasisVector::contract(Word coords) const noexcept {
  Word out = 0;
  while (coords != 0) {
    const int i = std::countr_zero(coords);
    out ^= elems_[i];
    coords &= coords - 1;
  }
  return out;
}

bool is_normal_element(const Field& field, Word alpha) {
  const int m = field.degree();
  std::vector<Word> powers(m);
  Word p = alpha;
  for (int i = 0; i < m; ++i) {
    powers[i] = p;
    p = field.sqr(p);
  }
  return word_rank(powers) == m;
}

Word find_normal_element(const Field& field, Rng& rng) {
  for (;;) {
    const Word alpha = rng.bits(field.degree());
    if (is_normal_element(field, alpha)) return alpha;
  }
}

Word canonical_normal_element(const Field& field) {
  Rng rng(derive_seed(0x6e6f726d616cULL, static_cast<std::uint64_t>(field.degree())));
  return find_normal_element(field, rng);
}

}  // namespace rankbreak
