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
#include "pheml/phe/prime.h"

#include <algorithm>
#include <vector>

#include "pheml/common/error.h"

namespace pheml::phe {
namespace {

const std::vector<unsigned long>& SmallPrimes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<unsigned long> out;
    constexpr unsigned long kLimit = 1 << 16;
    std::vector<bool> composite(kLimit, false);
    for (unsigned long i = 2; i < kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Trial division stops here; the search sieve uses the full table.
constexpr unsigned long kTrialLimit = 2000;
constexpr unsigned long kSieveWindow = 1 << 14;  // odd offsets per window

// 0: composite, 1: prime (n itself is small), 2: undecided.
int TrialDivision(const BigInt& n) {
  for (unsigned long p : SmallPrimes()) {
    if (p >= kTrialLimit) break;
    if (n == p) return 1;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return 0;
  }
  return 2;
}

bool MillerRabinRound(const BigInt& n, const BigInt& n_minus_1,
                      const BigInt& odd_part, unsigned long twos,
                      const BigInt& base) {
  BigInt x = PowMod(base, odd_part, n);
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < twos; ++i) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Rounds for random candidates: the average-case error of a round falls
// quickly with size, so large candidates need far fewer than the worst-case
// count to stay below 2^-100.
int RoundsForRandom(std::size_t bits) {
  if (bits >= 1024) return 5;
  if (bits >= 512) return 8;
  if (bits >= 256) return 16;
  return kMillerRabinRounds;
}

}  // namespace

bool IsProbablePrime(const BigInt& n, Rng& rng, int rounds) {
  if (n < 2) return false;
  int td = TrialDivision(n);
  if (td != 2) return td == 1;

  const BigInt n_minus_1 = n - 1;
  BigInt odd_part = n_minus_1;
  unsigned long twos = mpz_scan1(odd_part.get_mpz_t(), 0);
  odd_part >>= twos;

  const BigInt base_span = n - 3;  // bases in [2, n-2]
  for (int i = 0; i < rounds; ++i) {
    BigInt base = 2 + rng.UniformBelow(base_span);
    if (!MillerRabinRound(n, n_minus_1, odd_part, twos, base)) return false;
  }
  return true;
}

BigInt GeneratePrime(std::size_t bits, Rng& rng) {
  if (bits < 3) {
    throw Error(ErrorCode::kInvalidArgument, "prime size too small");
  }
  int tested = 0;
  std::vector<bool> composite(kSieveWindow);
  while (tested < kPrimeRetryBound) {
    // Random odd start with the top two bits set, then a sieved scan of
    // start + 2k for k < kSieveWindow.
    BigInt start = rng.RandomBits(bits);
    mpz_setbit(start.get_mpz_t(), bits - 1);
    mpz_setbit(start.get_mpz_t(), bits - 2);
    mpz_setbit(start.get_mpz_t(), 0);
    std::fill(composite.begin(), composite.end(), false);
    for (unsigned long p : SmallPrimes()) {
      if (p == 2) continue;
      // Every sieve prime must lie below the window, or it would strike
      // itself out.
      if (bits < 18 && (p >> (bits - 2)) != 0) break;
      const unsigned long r = mpz_fdiv_ui(start.get_mpz_t(), p);
      // First k with start + 2k == 0 (mod p): k = -r / 2 (mod p).
      unsigned long k = r == 0 ? 0 : ((p - r) % 2 == 0 ? (p - r) / 2
                                                        : (2 * p - r) / 2);
      for (; k < kSieveWindow; k += p) composite[k] = true;
    }
    for (unsigned long k = 0; k < kSieveWindow && tested < kPrimeRetryBound;
         ++k) {
      if (composite[k]) continue;
      BigInt candidate = start + 2 * k;
      if (BitLength(candidate) != bits) break;
      ++tested;
      if (IsProbablePrime(candidate, rng, RoundsForRandom(bits))) {
        return candidate;
      }
    }
  }
  throw Error(ErrorCode::kGenerationFailure,
              "no prime found within " + std::to_string(kPrimeRetryBound) +
                  " candidates");
}

PrimePair GeneratePrimePair(std::size_t modulus_bits, Rng& rng) {
  if (modulus_bits % 2 != 0 || modulus_bits < 16) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus size must be even and at least 16 bits");
  }
  const std::size_t half = modulus_bits / 2;
  for (int attempt = 0; attempt < kPrimeRetryBound; ++attempt) {
    BigInt p = GeneratePrime(half, rng);
    BigInt q = GeneratePrime(half, rng);
    if (p == q) continue;
    if (Gcd(p * q, (p - 1) * (q - 1)) != 1) continue;
    return {p, q};
  }
  throw Error(ErrorCode::kGenerationFailure, "no admissible prime pair");
}

}  // namespace pheml::phe
