/*
 * Copyright 2026 The pheml Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "pheml/common/rng.h"

#include <limits>

#include "pheml/common/error.h"

namespace pheml {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(SplitMix64(seed)) {}

Rng Rng::Fork(std::string_view label) const {
  return Rng(SplitMix64(seed_ ^ Fnv1a64(label)));
}

std::int64_t Rng::UniformInt(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) {
    throw Error(ErrorCode::kInvalidArgument, "empty integer range");
  }
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::int64_t>(NextU64());
  }
  const std::uint64_t range = span + 1;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = NextU64();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % range);
}

double Rng::UniformDouble() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

BigInt Rng::RandomBits(std::size_t bits) {
  BigInt out = 0;
  std::size_t remaining = bits;
  while (remaining >= 64) {
    out <<= 64;
    const std::uint64_t chunk = NextU64();
    BigInt word;
    mpz_import(word.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &chunk);
    out += word;
    remaining -= 64;
  }
  if (remaining > 0) {
    std::uint64_t tail = NextU64() >> (64 - remaining);
    out <<= static_cast<mp_bitcnt_t>(remaining);
    BigInt word;
    mpz_import(word.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &tail);
    out += word;
  }
  return out;
}

BigInt Rng::UniformBelow(const BigInt& bound) {
  if (bound <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "bound must be positive");
  }
  const std::size_t bits = BitLength(bound);
  BigInt draw;
  do {
    draw = RandomBits(bits);
  } while (draw >= bound);
  return draw;
}

BigInt Rng::UniformRange(const BigInt& lo, const BigInt& hi) {
  if (hi <= lo) {
    throw Error(ErrorCode::kInvalidArgument, "empty big-integer range");
  }
  return lo + UniformBelow(hi - lo);
}

BigInt Rng::UniformUnit(const BigInt& n) {
  for (;;) {
    BigInt r = UniformBelow(n);
    if (r != 0 && Gcd(r, n) == 1) return r;
  }
}

}  // namespace pheml
