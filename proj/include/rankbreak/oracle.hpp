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

// Exhaustive references for tiny parameters (m <= 6, q^(mk) <= 2^18, at most
// 20 F_2 unknowns). They share no elimination code with the main modules:
// ranks come from span enumeration and codewords from direct powering.

#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <vector>

#include "rankbreak/matfq.hpp"
#include "rankbreak/matfqm.hpp"
#include "rankbreak/rankcode.hpp"

namespace rankbreak::oracle {

inline constexpr int kMaxDegree = 6;
inline constexpr int kMaxMessageBits = 18;
inline constexpr std::size_t kMaxVars = 20;

/// F_2-rank of field elements by counting their span (m <= 6).
int span_rank(const Field& field, std::span<const Word> elems);

struct NearestCodeword {
  VecFqm message;
  VecFqm codeword;
  int distance;
};

/// Scans every codeword. Throws ErrorKind::oracle_tie when the minimum rank
/// distance is attained more than once.
NearestCodeword brute_force_decode(const GabidulinCode& code, const VecFqm& received);

/// Every codeword v of rank weight n whose Moore matrix spans the code.
std::vector<VecFqm> enumerate_generating_vectors(const GabidulinCode& code);

/// Minimum rank weight over all nonzero codewords.
int min_rank_distance(const GabidulinCode& code);

/// All x in F_2^nvars with coeff * x^T = 0, bit j of x = unknown j, sorted.
std::vector<std::uint32_t> exhaustive_system_solutions(const LinearSystemFq& system);
/// All x in F_2^nvars with sum_j x_j coeff_ext(e, j) = 0 for every row e, sorted.
std::vector<std::uint32_t> exhaustive_ext_solutions(const MatFqm& coeff_ext);
/// Every F_2-combination of the rows, sorted.
std::vector<std::uint32_t> span_of_rows(const MatFq& basis);

using Decoder = std::function<DecodeResult(const GabidulinCode&, const VecFqm&)>;

/// Oracle-backed consistency suites at tiny parameters. Writes one line per
/// suite to `log` and returns true when all pass. `decoder` is injectable so
/// a broken decoder can be shown to fail.
bool run_selftest(std::ostream& log, const Decoder& decoder = decode);

}  // namespace rankbreak::oracle
