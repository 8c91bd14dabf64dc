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

// Line-oriented text formats for keys, ciphertexts and messages.
//
//   lautan-<kind> v1 q=2 m=<m> n=<n> k=<k> mod=0x<hex>
//   <label>: <value>
//   ...
//
// Field elements are lowercase hex coordinate masks, vectors and matrix rows
// are comma-separated elements, F_2 rows are '0'/'1' strings. Kinds: pk, sk,
// ct, recovered.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "rankbreak/attack.hpp"
#include "rankbreak/lautan.hpp"

namespace rankbreak::io {

std::string format_vector(const VecFqm& v);
VecFqm parse_vector(std::string_view text, const Field& field);

std::string write_public_key(const PublicKey& pk);
PublicKey read_public_key(std::string_view text);

std::string write_private_key(const PrivateKey& sk);
/// Accepts both "sk" and "recovered" files.
PrivateKey read_private_key(std::string_view text);

std::string write_recovered_key(const RecoveredKey& key);
RecoveredKey read_recovered_key(std::string_view text);

std::string write_ciphertext(const Ciphertext& ct, std::size_t k);
Ciphertext read_ciphertext(std::string_view text);

/// One line of comma-separated hex elements.
std::string write_message(const VecFqm& msg);
VecFqm read_message(std::string_view text, const Field& field);

struct Header {
  std::string kind;
  Field field;
  std::size_t n;
  std::size_t k;
};

/// Parsed file: header plus label -> value map.
struct Document {
  Header header;
  std::map<std::string, std::string> entries;
};
Document parse_document(std::string_view text);

}  // namespace rankbreak::io
