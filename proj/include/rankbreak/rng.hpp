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

#include <cstddef>
#include <cstdint>
#include <random>

namespace rankbreak {

/// SplitMix64 finalizer. Used to derive independent seeds from (seed, index)
/// pairs, e.g. per-trial seeds in the benchmark harness.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for stream `index` under master seed `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// Deterministic random source: std::mt19937_64 seeded with one 64-bit word.
///
/// Only raw engine output is consumed (no std:: distributions), so a given
/// seed yields the same stream on every conforming standard library. Not
/// thread-safe; use split() to hand independent streams to workers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform word restricted to the low `bits` bits (0 <= bits <= 64).
  std::uint64_t bits(int bits) {
    const std::uint64_t w = next();
    return bits >= 64 ? w : (w & ((std::uint64_t{1} << bits) - 1));
  }

  /// Uniform integer in [0, bound); bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t w;
    do {
      w = next();
    } while (w >= limit);
    return w % bound;
  }

  bool coin() { return (next() >> 63) != 0; }

  /// Independent child stream; advances this generator by one draw.
  Rng split(std::uint64_t stream = 0) { return Rng(derive_seed(next(), stream)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rankbreak
