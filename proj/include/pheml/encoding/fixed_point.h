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
#ifndef PHEML_ENCODING_FIXED_POINT_H_
#define PHEML_ENCODING_FIXED_POINT_H_

#include <string>

#include "pheml/common/bigint.h"
#include "pheml/common/taint.h"
#include "pheml/phe/cloud_rsa.h"
#include "pheml/phe/paillier.h"

namespace pheml::encoding {

// Decimal digits kept for model parameters and features.
inline constexpr int kProtocolScale = 2;
// Scale of the exponential blinding constants e^r.
inline constexpr int kBlindScale = 4;
// The fractional part of a coefficient is applied as a 100th root.
inline constexpr int kFracRoot = 100;
inline constexpr int kFracDigits = 2;

struct FixedPoint {
  BigInt mantissa;
  int scale = kProtocolScale;

  double ToDouble() const;
};

// trunc(v * 10^scale), toward zero. Products that land within a relative
// 1e-9 of an integer snap to it, so 0.29 at scale 2 gives 29 and not 28.
BigInt FxEncode(double v, int scale);
double FxDecode(const BigInt& mantissa, int scale);

// Drops (from_scale - to_scale) decimal digits, truncating toward zero.
BigInt Truncate(const BigInt& mantissa, int from_scale, int to_scale);

// Signed integers inside Z_N. Residues above N/2 are negative.
BigInt ToResidue(const BigInt& m, const BigInt& n);
BigInt FromResidue(const BigInt& r, const BigInt& n);

struct CoeffDecomposition {
  int sign = 1;       // +1 or -1
  BigInt int_part;    // >= 0
  long frac_part = 0;  // in [0, 10^frac_digits)

  friend bool operator==(const CoeffDecomposition&,
                         const CoeffDecomposition&) = default;
};

// |theta| = int_part + frac_part / 100 after truncation to two decimals.
CoeffDecomposition DecomposeCoeff(double theta);
// Same split for a mantissa already at scale frac_digits.
CoeffDecomposition DecomposeMantissa(const BigInt& mantissa,
                                     int frac_digits = kFracDigits);
BigInt Recompose(const CoeffDecomposition& c, int frac_digits = kFracDigits);

// A ciphertext together with the decimal scale of its plaintext.
template <typename Ct>
struct Scaled {
  Ct ct;
  int scale = 0;
  Taint taint = Taint::Cipher();
};
using ScaledPaillier = Scaled<phe::PaillierCiphertext>;
using ScaledRsa = Scaled<phe::CloudRsaCiphertext>;

// floor(log10 n), exact.
int KeyDigits(const BigInt& n);
// Decimal digits assumed for a key size: 308, 616, 1232 for 1024, 2048,
// 4096 bits, floor(bits * log10(2)) otherwise.
int ApproxKeyDigits(int key_bits);

struct DigitBudget {
  int key_digits = 0;
  double required_digits = 0;

  bool ok() const { return required_digits < key_digits; }
  double margin() const { return key_digits - required_digits; }
  std::string Describe() const;
};

// (theta_l1_bound + d - 1) * 2 < key digits.
DigitBudget BudgetCheckLr(int d, double theta_l1_bound, int key_bits);
// Throws kBudgetExceeded with the budget's description when !b.ok().
void RequireBudget(const DigitBudget& b, const std::string& what);

// Multiplies the plaintext mantissa by 10^t and adds t to the scale.
ScaledPaillier RescaleCt(const phe::PaillierPublicKey& pk,
                         const ScaledPaillier& sc, int t);

// fx(e^x, scale); the base of every exponential ciphertext.
BigInt ExpMantissa(double x, int scale = kProtocolScale);

// Smallest m' >= m that is a unit mod n. Bumps are counted in *bumps.
BigInt BumpToUnit(const BigInt& m, const BigInt& n, int* bumps);

// B = fx(e^r, 4).
BigInt BlindFactor(int r);
// (B / 10^4)^(1 + 1/100): the factor a blinded power result carries.
double BlindPowerFactor(const BigInt& blind);
// Its reciprocal, applied by the demander to remove the blinding.
double UnblindFactor(const BigInt& blind);

// int/10^s1 * (frac/10^s2)^(1/100), evaluated in log space because the
// fractional component can have thousands of digits.
double RecoverPower(const BigInt& int_mantissa, int int_scale,
                    const BigInt& frac_mantissa, int frac_scale);

}  // namespace pheml::encoding

#endif  // PHEML_ENCODING_FIXED_POINT_H_
