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
#ifndef PHEML_COMMON_BIGINT_H_
#define PHEML_COMMON_BIGINT_H_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace pheml {

using BigInt = mpz_class;

// Lowercase hex, big-endian, no leading zeros ("0" for zero, "-" prefix for
// negatives). This is the canonical integer form on the wire.
std::string ToHex(const BigInt& value);
BigInt FromHex(std::string_view hex);

BigInt Pow10(unsigned exponent);
std::size_t BitLength(const BigInt& value);

// Quotient truncated toward zero.
BigInt TruncDiv(const BigInt& numerator, const BigInt& denominator);

// Non-negative residue of value mod modulus.
BigInt Mod(const BigInt& value, const BigInt& modulus);

// Throws kInvalidArgument when value has no inverse.
BigInt ModInverse(const BigInt& value, const BigInt& modulus);

// base^exponent mod modulus; a negative exponent goes through the inverse.
BigInt PowMod(const BigInt& base, const BigInt& exponent,
              const BigInt& modulus);

BigInt Gcd(const BigInt& a, const BigInt& b);

// Natural log of |value| for value != 0, usable far beyond double range.
double LnAbs(const BigInt& value);
double Log10Abs(const BigInt& value);

// mantissa / 10^scale as a double, computed through an exact rational so
// mantissas with thousands of digits decode correctly.
double ScaledToDouble(const BigInt& mantissa, int scale);

// 64-bit FNV-1a, used for stable identifiers.
std::uint64_t Fnv1a64(std::string_view bytes);

}  // namespace pheml

#endif  // PHEML_COMMON_BIGINT_H_
