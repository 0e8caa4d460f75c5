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
#include "pheml/common/bigint.h"

#include <cmath>
#include <numbers>

#include "pheml/common/error.h"

namespace pheml {

std::string ToHex(const BigInt& value) { return value.get_str(16); }

BigInt FromHex(std::string_view hex) {
  std::string_view digits = hex;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) {
    throw Error(ErrorCode::kDataFormat, "empty hex integer");
  }
  for (char c : digits) {
    bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    if (!ok) {
      throw Error(ErrorCode::kDataFormat,
                  "non-canonical hex integer '" + std::string(hex) + "'");
    }
  }
  if (digits.size() > 1 && digits.front() == '0') {
    throw Error(ErrorCode::kDataFormat,
                "hex integer has leading zeros '" + std::string(hex) + "'");
  }
  return BigInt(std::string(hex), 16);
}

BigInt Pow10(unsigned exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

std::size_t BitLength(const BigInt& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

BigInt TruncDiv(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kInvalidArgument, "division by zero");
  }
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return q;
}

BigInt Mod(const BigInt& value, const BigInt& modulus) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

BigInt ModInverse(const BigInt& value, const BigInt& modulus) {
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t()) ==
      0) {
    throw Error(ErrorCode::kInvalidArgument, "value is not invertible");
  }
  return inv;
}

BigInt PowMod(const BigInt& base, const BigInt& exponent,
              const BigInt& modulus) {
  BigInt out;
  if (exponent < 0) {
    BigInt inv = ModInverse(base, modulus);
    BigInt pos = -exponent;
    mpz_powm(out.get_mpz_t(), inv.get_mpz_t(), pos.get_mpz_t(),
             modulus.get_mpz_t());
  } else {
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(),
             modulus.get_mpz_t());
  }
  return out;
}

BigInt Gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

double LnAbs(const BigInt& value) {
  if (value == 0) {
    throw Error(ErrorCode::kInvalidArgument, "log of zero");
  }
  long exp2 = 0;
  double frac = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  return std::log(std::fabs(frac)) +
         static_cast<double>(exp2) * std::numbers::ln2;
}

double Log10Abs(const BigInt& value) {
  return LnAbs(value) / std::numbers::ln10;
}

double ScaledToDouble(const BigInt& mantissa, int scale) {
  if (mantissa == 0) return 0.0;
  if (scale <= 0) {
    BigInt v = mantissa * Pow10(static_cast<unsigned>(-scale));
    return v.get_d();
  }
  // Exact rational rounding via mpq, then to double.
  mpq_class q(mantissa, Pow10(static_cast<unsigned>(scale)));
  q.canonicalize();
  return q.get_d();
}

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace pheml
