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

// Arithmetic in GF(2^m), 2 <= m <= 64.
//
// Elements are coordinate masks in the polynomial basis: bit i is the
// coefficient of x^i. Containers (vectors, matrices) store raw masks and carry
// the Field once; FieldElement is the checked scalar used at API boundaries.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rankbreak/rng.hpp"

namespace rankbreak {

using Word = std::uint64_t;

class FieldElement;

class Field {
 public:
  static constexpr int kMinDegree = 2;
  static constexpr int kMaxDegree = 64;

  /// GF(2^m) with the numerically smallest irreducible modulus of degree m.
  static Field with_degree(int m);

  /// GF(2^m) with modulus x^m + low; throws unless it is irreducible.
  static Field with_modulus(int m, Word low);

  int q() const noexcept { return 2; }
  int degree() const noexcept { return m_; }
  /// Modulus without its leading x^m term.
  Word modulus_low() const noexcept { return low_; }
  Word mask() const noexcept { return mask_; }
  bool contains(Word x) const noexcept { return (x & ~mask_) == 0; }

  /// Full modulus as "0x<hex>", e.g. "0xb" for x^3+x+1.
  std::string modulus_hex() const;
  /// "q=2 m=<m> mod=0x<hex>"
  std::string header() const;

  Word add(Word a, Word b) const noexcept { return a ^ b; }
  Word mul(Word a, Word b) const noexcept;
  Word sqr(Word a) const noexcept { return mul(a, a); }
  Word pow(Word a, std::uint64_t e) const noexcept;
  /// Throws ErrorKind::invalid_input on zero.
  Word inv(Word a) const;
  Word div(Word a, Word b) const { return mul(a, inv(b)); }
  /// a^(2^l), with l reduced mod m (negative l allowed).
  Word frobenius(Word a, long long l) const noexcept;

  FieldElement element(Word coords) const;
  FieldElement zero() const;
  FieldElement one() const;
  /// The class of x, i.e. mask 0b10.
  FieldElement generator() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(int m, Word low) noexcept;

  int m_;
  Word low_;
  Word mask_;
};

/// Rabin irreducibility test for x^m + low over GF(2).
bool is_irreducible(int m, Word low);

class FieldElement {
 public:
  FieldElement(const Field& field, Word coords);

  const Field& field() const noexcept { return field_; }
  Word coords() const noexcept { return coords_; }
  bool is_zero() const noexcept { return coords_ == 0; }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius(long long l) const;
  std::string to_hex() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  Field field_;
  Word coords_;
};

/// Lowercase hex of a coordinate mask without prefix ("2" for x, "0" for zero).
std::string to_hex(Word coords);
/// Inverse of to_hex; rejects malformed text and values outside the field.
Word parse_hex(std::string_view text, const Field& field);

/// F_2-rank of a family of vectors packed one per word.
int word_rank(std::span<const Word> vectors);

enum class BasisKind { polynomial, normal, other };

/// An ordered F_2-basis of GF(2^m), with the change of coordinates to and
/// from the polynomial basis precomputed.
class BasisVector {
 public:
  static BasisVector polynomial(const Field& field);
  /// (alpha^(2^(m-1)), ..., alpha^2, alpha); throws unless alpha is normal.
  static BasisVector normal(const Field& field, Word alpha);
  /// Arbitrary basis; throws unless the m elements are independent.
  static BasisVector from_elements(const Field& field, std::vector<Word> elems);

  const Field& field() const noexcept { return field_; }
  BasisKind kind() const noexcept { return kind_; }
  const std::vector<Word>& elements() const noexcept { return elems_; }
  int size() const noexcept { return static_cast<int>(elems_.size()); }

  /// Coordinates of x in this basis: bit i is the coefficient of elements()[i].
  Word expand(Word x) const noexcept;
  /// sum_i bit_i(coords) * elements()[i]
  Word contract(Word coords) const noexcept;

 private:
  BasisVector(const Field& field, BasisKind kind, std::vector<Word> elems);

  Field field_;
  BasisKind kind_;
  std::vector<Word> elems_;
  // Row j holds the coordinates of x^j in this basis.
  std::vector<Word> to_basis_;
};

/// True when alpha, alpha^2, ..., alpha^(2^(m-1)) are F_2-independent.
bool is_normal_element(const Field& field, Word alpha);
/// Random normal element; retries until one is found.
Word find_normal_element(const Field& field, Rng& rng);
/// Fixed normal element per field: first hit of a generator seeded by m.
/// (Scanning masks upward can take millions of steps, e.g. at m = 22.)
Word canonical_normal_element(const Field& field);

}  // namespace rankbreak
