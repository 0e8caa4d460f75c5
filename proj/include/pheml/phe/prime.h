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
#ifndef PHEML_PHE_PRIME_H_
#define PHEML_PHE_PRIME_H_

#include <cstddef>

#include "pheml/common/bigint.h"
#include "pheml/common/rng.h"

namespace pheml::phe {

inline constexpr int kMillerRabinRounds = 40;
inline constexpr int kPrimeRetryBound = 10000;

// Miller-Rabin with "rounds" bases drawn from rng, preceded by trial
// division. Deterministic for a fixed rng state.
bool IsProbablePrime(const BigInt& n, Rng& rng,
                     int rounds = kMillerRabinRounds);

// Uniform random prime of exactly "bits" bits with the two top bits set, so
// the product of two such primes has exactly 2*bits bits. Scans a sieved
// window above a random odd start; after kPrimeRetryBound sieve survivors
// fail Miller-Rabin, throws kGenerationFailure.
BigInt GeneratePrime(std::size_t bits, Rng& rng);

// Draws a pair p != q of bits/2-bit primes with gcd(pq, (p-1)(q-1)) = 1.
struct PrimePair {
  BigInt p;
  BigInt q;
};
PrimePair GeneratePrimePair(std::size_t modulus_bits, Rng& rng);

}  // namespace pheml::phe

#endif  // PHEML_PHE_PRIME_H_
