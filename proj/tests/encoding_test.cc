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
#include <gtest/gtest.h>

#include <cmath>

#include "pheml/common/error.h"
#include "pheml/encoding/fixed_point.h"
#include "pheml/phe/paillier.h"

namespace pheml::encoding {
namespace {

BigInt PowUi(const BigInt& b, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

TEST(FxEncode, TruncatesTowardZero) {
  EXPECT_EQ(FxEncode(0.1, 2), 10);
  EXPECT_EQ(FxEncode(std::exp(0.1), 2), 110);
  EXPECT_EQ(FxEncode(-0.035, 2), -3);
  EXPECT_EQ(FxEncode(0.29, 2), 29);  // 0.29 * 100 = 28.999...
  EXPECT_EQ(FxEncode(0, 6), 0);
}

TEST(FxDecode, Examples) {
  EXPECT_DOUBLE_EQ(FxDecode(154, 2), 1.54);
  EXPECT_EQ(FxDecode(0, 7), 0.0);
  EXPECT_DOUBLE_EQ(FxDecode(-25, 2), -0.25);
}

TEST(Truncate, DropsDigitsTowardZero) {
  EXPECT_EQ(Truncate(550000, 6, 2), 55);
  EXPECT_EQ(Truncate(-559999, 6, 2), -55);
  EXPECT_THROW(Truncate(7, 2, 4), Error);
}

TEST(Residue, SignedConvention) {
  EXPECT_EQ(ToResidue(-4, 35), 31);
  EXPECT_EQ(FromResidue(31, 35), -4);
  EXPECT_EQ(ToResidue(4, 35), 4);
  EXPECT_EQ(FromResidue(17, 35), 17);
  EXPECT_EQ(FromResidue(18, 35), -17);
  EXPECT_THROW(ToResidue(18, 35), Error);
}

TEST(Decompose, Examples) {
  EXPECT_EQ(DecomposeCoeff(1.31), (CoeffDecomposition{1, 1, 31}));
  EXPECT_EQ(DecomposeCoeff(2.42), (CoeffDecomposition{1, 2, 42}));
  EXPECT_EQ(DecomposeCoeff(-0.07), (CoeffDecomposition{-1, 0, 7}));
  EXPECT_EQ(DecomposeMantissa(754, 2), (CoeffDecomposition{1, 7, 54}));
  EXPECT_EQ(Recompose(DecomposeMantissa(-1234)), -1234);
}

TEST(RescaleCt, MultipliesByPowerOfTen) {
  Rng rng(1);
  const phe::PaillierKeyPair kp = phe::PaillierKeygen(512, rng);
  const ScaledPaillier c{phe::PaillierEncrypt(kp.pub, 154, rng), 2,
                         Taint::Cipher()};
  const ScaledPaillier up = RescaleCt(kp.pub, c, 2);
  EXPECT_EQ(up.scale, 4);
  EXPECT_EQ(phe::PaillierDecrypt(kp.priv, up.ct), 15400);
  const ScaledPaillier same = RescaleCt(kp.pub, c, 0);
  EXPECT_EQ(same.scale, 2);
  EXPECT_EQ(same.ct, c.ct);
  EXPECT_THROW(RescaleCt(kp.pub, c, 200), Error);
}

TEST(DigitBudget, LrExamples) {
  const DigitBudget ok = BudgetCheckLr(9, 50, 2048);
  EXPECT_TRUE(ok.ok());
  EXPECT_DOUBLE_EQ(ok.required_digits, 116);
  EXPECT_EQ(ok.key_digits, 616);
  const DigitBudget bad = BudgetCheckLr(14, 300, 1024);
  EXPECT_FALSE(bad.ok());
  EXPECT_DOUBLE_EQ(bad.required_digits, 626);
  EXPECT_EQ(bad.key_digits, 308);
  EXPECT_TRUE(BudgetCheckLr(1, 0, 512).ok());
  try {
    RequireBudget(bad, "test configuration");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
    EXPECT_NE(std::string(e.what()).find("margin"), std::string::npos);
  }
}

TEST(KeyDigits, ExactFloorLog10) {
  EXPECT_EQ(KeyDigits(35), 1);
  EXPECT_EQ(KeyDigits(Pow10(40)), 40);
  EXPECT_EQ(KeyDigits(Pow10(40) - 1), 39);
  EXPECT_EQ(ApproxKeyDigits(1024), 308);
  EXPECT_EQ(ApproxKeyDigits(2048), 616);
  EXPECT_EQ(ApproxKeyDigits(4096), 1232);
}

TEST(Exponentials, WorkedExampleConstants) {
  EXPECT_EQ(ExpMantissa(0.1), 110);
  EXPECT_EQ(ExpMantissa(0.2), 122);
  EXPECT_EQ(ExpMantissa(0), 100);
  EXPECT_EQ(BlindFactor(-2), 1353);
  EXPECT_EQ(FxEncode(UnblindFactor(1353), 2), 754);
  EXPECT_NEAR(BlindPowerFactor(1353) * UnblindFactor(1353), 1.0, 1e-12);
}

TEST(Exponentials, BumpToUnit) {
  int bumps = 0;
  EXPECT_EQ(BumpToUnit(14, 35, &bumps), 16);
  EXPECT_EQ(bumps, 2);
  EXPECT_EQ(BumpToUnit(8, 35, &bumps), 8);
  EXPECT_EQ(bumps, 2);
}

TEST(RecoverPower, WorkedExampleIntermediates) {
  const BigInt int_m = PowUi(110, 1) * PowUi(122, 2);
  EXPECT_EQ(int_m, 1637240);
  EXPECT_EQ(int_m * 1353, 2215185720);
  const BigInt frac_m = PowUi(110, 31) * PowUi(122, 42);
  // Scales: 2 per unit of exponent, plus 4 for the blind.
  const double v = RecoverPower(int_m * 1353, 10, frac_m * 1353, 150);
  const double direct =
      1.10 * 1.22 * 1.22 * std::pow(1.10, 0.31) * std::pow(1.22, 0.42) *
      std::pow(0.1353, 1.01);
  EXPECT_NEAR(v, direct, 1e-9);
  EXPECT_EQ(FxEncode(v, 2), 24);
  EXPECT_EQ(RecoverPower(1, 0, 1, 0), 1.0);
  EXPECT_THROW(RecoverPower(0, 0, 1, 0), Error);
}

}  // namespace
}  // namespace pheml::encoding
