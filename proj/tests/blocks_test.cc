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

#include <memory>

#include "pheml/blocks/interactive.h"
#include "pheml/common/error.h"
#include "pheml/protocols/setup.h"
#include "test_util.h"

namespace pheml::blocks {
namespace {

using encoding::kProtocolScale;

BigInt PowUi(const BigInt& b, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

class BlocksTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    protocols::SetupOptions opts;
    opts.key_bits = 512;
    opts.rsa_bits = 1024;
    opts.seed = 17;
    std::vector<data::Dataset> shards;
    for (int i = 0; i < 3; ++i) shards.push_back(pheml::testing::Synthetic(2, 2, i));
    dep_ = new protocols::Deployment(std::move(shards), opts);
    dep_->owner(1).SetRecords({{10, 20}});
  }
  static void TearDownTestSuite() { delete dep_; }

  DemanderContext& ctx() { return dep_->demander(); }
  const phe::PaillierPublicKey& pk(int i) {
    return dep_->owner(i).paillier().pub;
  }
  ScaledPaillier Enc(int owner, const BigInt& m, int scale) {
    return EncryptConstant(pk(owner), m, scale, rng_);
  }
  BigInt Dec(int owner, const ScaledPaillier& c) {
    return encoding::FromResidue(
        phe::PaillierDecrypt(dep_->owner(owner).paillier().priv, c.ct),
        pk(owner).n);
  }
  BigInt DecRsa(int owner, const ScaledRsa& c) {
    return phe::CloudRsaDecrypt(*dep_->owner(owner).rsa(), c.ct);
  }

  static protocols::Deployment* dep_;
  Rng rng_{3};
};
protocols::Deployment* BlocksTest::dep_ = nullptr;

TEST_F(BlocksTest, AddAndSubtract) {
  const ScaledPaillier a = Enc(1, 10, 2);
  const ScaledPaillier b = Enc(1, 20, 2);
  const ScaledPaillier sum = SecureAdd(pk(1), a, b);
  EXPECT_EQ(Dec(1, sum), 30);
  EXPECT_EQ(sum.scale, 2);
  EXPECT_EQ(Dec(1, SecureAdd(pk(1), a, Enc(1, 0, 2))), 10);
  EXPECT_EQ(Dec(1, SecureSub(pk(1), sum, a)), 20);
  EXPECT_EQ(Dec(1, SecureSub(pk(1), a, sum)), -20);
  try {
    SecureAdd(pk(1), a, Enc(1, 1, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kScaleMismatch);
  }
}

TEST_F(BlocksTest, DotProduct) {
  const std::vector<ScaledPaillier> xs{Enc(1, 10, 2), Enc(1, 20, 2)};
  const ScaledPaillier d = SecureDot(pk(1), xs, {100, 100}, kProtocolScale);
  EXPECT_EQ(d.scale, 4);
  EXPECT_EQ(Dec(1, d), 3000);
  EXPECT_EQ(Dec(1, SecureDot(pk(1), xs, {0, 0}, kProtocolScale)), 0);
  EXPECT_EQ(Dec(1, SecureDot(pk(1), xs, {-3, 5}, kProtocolScale)), 70);
}

TEST_F(BlocksTest, ScalarMultiply) {
  const ScaledPaillier c = SecureScalarMul(pk(1), Enc(1, -15, 2), 40, 2);
  EXPECT_EQ(c.scale, 4);
  EXPECT_EQ(Dec(1, c), -600);
}

TEST_F(BlocksTest, CiphertextMultiplyAddsScales) {
  const phe::CloudRsaEncryptionKey& ek = *ctx().directory.Owner(1).rsa;
  const ScaledRsa a{phe::CloudRsaEncrypt(ek, 1637240), 6, Taint::Cipher()};
  const ScaledRsa b{phe::CloudRsaEncrypt(ek, 1353), 4, Taint::Cipher()};
  const ScaledRsa p = SecureCtMul(ek.pub, a, b);
  EXPECT_EQ(p.scale, 10);
  EXPECT_EQ(DecRsa(1, p), 2215185720);
  const ScaledRsa one{phe::CloudRsaEncrypt(ek, 1), 0, Taint::Cipher()};
  EXPECT_EQ(DecRsa(1, SecureCtMul(ek.pub, a, one)), 1637240);
}

TEST_F(BlocksTest, PowerOfWorkedExample) {
  const ExpEncodedVector ev = FetchExpVector(ctx(), 1, 0);
  // SecurePow evaluates e^{-theta^T x}; the positive-base products of the
  // worked example come from the negated coefficients.
  const PowResult pr =
      SecurePow(ctx().directory.Owner(1).rsa->pub, ev, {-131, -242});
  EXPECT_EQ(DecRsa(1, pr.int_ct), 1637240);
  EXPECT_EQ(pr.int_ct.scale, 6);
  EXPECT_EQ(DecRsa(1, pr.frac_ct), PowUi(110, 31) * PowUi(122, 42));
  EXPECT_EQ(pr.frac_ct.scale, 146);

  const PowResult zero =
      SecurePow(ctx().directory.Owner(1).rsa->pub, ev, {0, 0});
  EXPECT_EQ(DecRsa(1, zero.int_ct), 1);
  EXPECT_EQ(DecRsa(1, zero.frac_ct), 1);
  EXPECT_EQ(zero.int_ct.scale, 0);

  const PowResult pos =
      SecurePow(ctx().directory.Owner(1).rsa->pub, ev, {100, 0});
  EXPECT_EQ(DecRsa(1, pos.int_ct), 90);  // fx(e^{-0.1}, 2)
}

TEST_F(BlocksTest, PowerConversionWorkedExample) {
  const ExpEncodedVector ev = FetchExpVector(ctx(), 1, 0);
  const PowResult pr =
      SecurePow(ctx().directory.Owner(1).rsa->pub, ev, {-131, -242});
  const std::uint64_t before = dep_->session().interactions();
  const ScaledPaillier w = ConvertRsaToPaillierBlinded(
      ctx(), 1, pr, encoding::BlindFactor(-2), kProtocolScale);
  EXPECT_EQ(dep_->session().interactions(), before + 1);
  EXPECT_EQ(Dec(1, w), 24);
  const ScaledPaillier u = UnblindPower(pk(1), w, 1353, 2);
  EXPECT_EQ(u.scale, 4);
  EXPECT_EQ(Dec(1, u), 24 * 754);

  // The worked example's owner reply, 22, unblinds to 1.6588.
  const ScaledPaillier ex = UnblindPower(pk(1), Enc(1, 22, 2), 1353, 2);
  EXPECT_EQ(Dec(1, ex), 15400 + 1188);
}

TEST_F(BlocksTest, KeySwitchChain) {
  std::vector<ScaledPaillier> cts{Enc(1, 1234, 2), Enc(1, 0, 2),
                                  Enc(1, -77, 4)};
  cts = ConvertPaillierKey(ctx(), 1, pk(2), cts);
  cts = ConvertPaillierKey(ctx(), 2, pk(3), cts);
  cts = ConvertPaillierKey(ctx(), 3, ctx().keys.pub, cts);
  EXPECT_EQ(ctx().Decrypt(cts[0]), 1234);
  EXPECT_EQ(ctx().Decrypt(cts[1]), 0);
  EXPECT_EQ(ctx().Decrypt(cts[2]), -77);
  EXPECT_EQ(cts[2].scale, 4);
}

TEST_F(BlocksTest, SignExamples) {
  EXPECT_TRUE(SecureSign(ctx(), 1, Enc(1, 4000, 4)));
  EXPECT_FALSE(SecureSign(ctx(), 1, Enc(1, -2500, 4)));
  EXPECT_FALSE(SecureSign(ctx(), 1, Enc(1, 0, 4)));
  for (int i = 0; i < 50; ++i) {
    const BigInt v = rng_.UniformInt(-1000000, 1000000);
    ASSERT_EQ(SecureSign(ctx(), 2, Enc(2, v, 4)), v > 0) << v;
  }
}

TEST_F(BlocksTest, SecureSumSmall) {
  dep_->owner(1).SetSumSource("t", {3, 0});
  dep_->owner(2).SetSumSource("t", {5, 0});
  dep_->owner(3).SetSumSource("t", {7, 0});
  const std::uint64_t before = dep_->session().interactions();
  const std::vector<BigInt> s = SecureSum(ctx(), "t");
  EXPECT_EQ(dep_->session().interactions(), before + 4);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], 15);
  EXPECT_EQ(s[1], 0);
}

TEST(SecureSum, RejectsOversizedValues) {
  protocols::SetupOptions opts;
  opts.key_bits = 512;
  std::vector<data::Dataset> shards(2, pheml::testing::Synthetic(1, 1, 1));
  protocols::Deployment dep(std::move(shards), opts);
  const MaskRange mr = ComputeMaskRange(dep.demander().directory, 2);
  dep.owner(1).SetSumSource("big", {mr.sum_noise_bound});
  dep.owner(2).SetSumSource("big", {0});
  EXPECT_THROW(SecureSum(dep.demander(), "big"), Error);
  EXPECT_FALSE(dep.session().open());
}

TEST(SecureSum, MatchesPlainSumForSeveralOwnerCounts) {
  for (int n : {2, 5, 10}) {
    protocols::SetupOptions opts;
    opts.key_bits = 512;
    opts.seed = 100 + n;
    std::vector<data::Dataset> shards(n, pheml::testing::Synthetic(1, 1, 1));
    protocols::Deployment dep(std::move(shards), opts);
    Rng rng(n);
    std::vector<BigInt> expect(20, BigInt(0));
    for (int i = 1; i <= n; ++i) {
      std::vector<BigInt> v;
      for (int j = 0; j < 20; ++j) {
        v.push_back(rng.UniformInt(-1000000000, 1000000000));
        expect[j] += v.back();
      }
      dep.owner(i).SetSumSource("f", v);
    }
    EXPECT_EQ(SecureSum(dep.demander(), "f"), expect) << n;
    EXPECT_EQ(dep.session().interactions(), static_cast<std::uint64_t>(n + 1));
  }
}

}  // namespace
}  // namespace pheml::blocks
