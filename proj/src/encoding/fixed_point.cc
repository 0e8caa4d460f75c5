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
#include "pheml/encoding/fixed_point.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "pheml/common/error.h"

namespace pheml::encoding {
namespace {

constexpr double kSnapEpsilon = 1e-9;
constexpr double kRootExponent = 1.0 + 1.0 / kFracRoot;

}  // namespace

double FixedPoint::ToDouble() const { return FxDecode(mantissa, scale); }

BigInt FxEncode(double v, int scale) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::kEncoding, "cannot encode a non-finite value");
  }
  if (scale < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative scale");
  }
  const double y = v * std::pow(10.0, scale);
  if (!std::isfinite(y)) {
    throw Error(ErrorCode::kBudgetExceeded, "fixed-point overflow");
  }
  const double nearest = std::nearbyint(y);
  double t = std::trunc(y);
  if (std::fabs(y - nearest) <= kSnapEpsilon * std::max(1.0, std::fabs(y))) {
    t = nearest;
  }
  BigInt out;
  mpz_set_d(out.get_mpz_t(), t);
  return out;
}

double FxDecode(const BigInt& mantissa, int scale) {
  return ScaledToDouble(mantissa, scale);
}

BigInt Truncate(const BigInt& mantissa, int from_scale, int to_scale) {
  if (to_scale > from_scale) {
    throw Error(ErrorCode::kScaleMismatch, "truncation cannot add digits");
  }
  return TruncDiv(mantissa, Pow10(static_cast<unsigned>(from_scale - to_scale)));
}

BigInt ToResidue(const BigInt& m, const BigInt& n) {
  if (2 * abs(m) >= n) {
    throw Error(ErrorCode::kBudgetExceeded,
                "signed value does not fit in half the modulus");
  }
  return m < 0 ? BigInt(n + m) : m;
}

BigInt FromResidue(const BigInt& r, const BigInt& n) {
  if (r < 0 || r >= n) {
    throw Error(ErrorCode::kInvalidArgument, "residue out of range");
  }
  return 2 * r > n ? BigInt(r - n) : r;
}

CoeffDecomposition DecomposeCoeff(double theta) {
  return DecomposeMantissa(FxEncode(theta, kFracDigits), kFracDigits);
}

CoeffDecomposition DecomposeMantissa(const BigInt& mantissa, int frac_digits) {
  const BigInt unit = Pow10(static_cast<unsigned>(frac_digits));
  const BigInt mag = abs(mantissa);
  CoeffDecomposition out;
  out.sign = mantissa < 0 ? -1 : 1;
  out.int_part = mag / unit;
  out.frac_part = BigInt(mag % unit).get_si();
  return out;
}

BigInt Recompose(const CoeffDecomposition& c, int frac_digits) {
  BigInt mag = c.int_part * Pow10(static_cast<unsigned>(frac_digits)) +
               c.frac_part;
  return c.sign < 0 ? BigInt(-mag) : mag;
}

int KeyDigits(const BigInt& n) {
  if (n <= 0) throw Error(ErrorCode::kInvalidArgument, "non-positive modulus");
  // sizeinbase may overshoot by one.
  int digits = static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 10));
  while (digits > 0 && Pow10(static_cast<unsigned>(digits - 1)) > n) --digits;
  return digits - 1;
}

int ApproxKeyDigits(int key_bits) {
  switch (key_bits) {
    case 1024:
      return 308;
    case 2048:
      return 616;
    case 4096:
      return 1232;
    default:
      return static_cast<int>(std::floor(key_bits * std::log10(2.0)));
  }
}

std::string DigitBudget::Describe() const {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "digit budget: required %.2f digits, key provides %d "
                "(margin %.2f)",
                required_digits, key_digits, margin());
  return buf;
}

DigitBudget BudgetCheckLr(int d, double theta_l1_bound, int key_bits) {
  if (d < 1 || theta_l1_bound < 0) {
    throw Error(ErrorCode::kInvalidArgument, "bad budget parameters");
  }
  return DigitBudget{ApproxKeyDigits(key_bits),
                     (theta_l1_bound + d - 1) * 2.0};
}

void RequireBudget(const DigitBudget& b, const std::string& what) {
  if (!b.ok()) {
    throw Error(ErrorCode::kBudgetExceeded,
                what + " exceeds the digit budget; " + b.Describe());
  }
}

ScaledPaillier RescaleCt(const phe::PaillierPublicKey& pk,
                         const ScaledPaillier& sc, int t) {
  if (t < 0) throw Error(ErrorCode::kInvalidArgument, "negative rescale");
  if (t == 0) return sc;
  const int scale = sc.scale + t;
  if (scale >= KeyDigits(pk.n)) {
    throw Error(ErrorCode::kBudgetExceeded,
                "rescale to " + std::to_string(scale) +
                    " digits exceeds the key");
  }
  return ScaledPaillier{
      phe::PaillierScalarPow(pk, sc.ct, Pow10(static_cast<unsigned>(t))),
      scale, sc.taint};
}

BigInt ExpMantissa(double x, int scale) { return FxEncode(std::exp(x), scale); }

BigInt BumpToUnit(const BigInt& m, const BigInt& n, int* bumps) {
  BigInt out = m;
  if (out < 1) out = 1;
  while (Gcd(out, n) != 1) {
    ++out;
    if (bumps != nullptr) ++*bumps;
  }
  return out;
}

BigInt BlindFactor(int r) { return ExpMantissa(r, kBlindScale); }

double BlindPowerFactor(const BigInt& blind) {
  return std::exp(kRootExponent *
                  (LnAbs(blind) - kBlindScale * std::numbers::ln10));
}

double UnblindFactor(const BigInt& blind) {
  return std::exp(kRootExponent *
                  (kBlindScale * std::numbers::ln10 - LnAbs(blind)));
}

double RecoverPower(const BigInt& int_mantissa, int int_scale,
                    const BigInt& frac_mantissa, int frac_scale) {
  if (int_mantissa <= 0 || frac_mantissa <= 0) {
    throw Error(ErrorCode::kProtocolAbort,
                "power components must be positive");
  }
  const double ln_int = LnAbs(int_mantissa) - int_scale * std::numbers::ln10;
  const double ln_frac =
      LnAbs(frac_mantissa) - frac_scale * std::numbers::ln10;
  return std::exp(ln_int + ln_frac / kFracRoot);
}

}  // namespace pheml::encoding
