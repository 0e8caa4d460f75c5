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
#ifndef PHEML_COMMON_RNG_H_
#define PHEML_COMMON_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

#include "pheml/common/bigint.h"

namespace pheml {

// Deterministic randomness source. Every draw is derived from the raw 64-bit
// output of std::mt19937_64 (whose sequence is fixed by the standard), never
// from the implementation-defined distribution templates, so a seed yields
// the same stream on every platform.
//
// Instances are not shared between parties or threads; use Fork() to derive
// an independent named stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // A child stream whose seed depends only on this stream's seed and label.
  Rng Fork(std::string_view label) const;

  std::uint64_t seed() const { return seed_; }

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [lo, hi], inclusive.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

  // Uniform in [0, 1).
  double UniformDouble();

  // Uniform integer with exactly "bits" random bits (value < 2^bits).
  BigInt RandomBits(std::size_t bits);

  // Uniform in [0, bound); bound must be positive.
  BigInt UniformBelow(const BigInt& bound);

  // Uniform in [lo, hi).
  BigInt UniformRange(const BigInt& lo, const BigInt& hi);

  // Uniform element of Z_n^*.
  BigInt UniformUnit(const BigInt& n);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace pheml

#endif  // PHEML_COMMON_RNG_H_
