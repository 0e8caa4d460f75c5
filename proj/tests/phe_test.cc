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

#include "json.hpp"
#include "pheml/common/error.h"
#include "pheml/oracle/plain.h"
#include "pheml/phe/cloud_rsa.h"
#include "pheml/phe/key_io.h"
#include "pheml/phe/paillier.h"
#include "pheml/phe/prime.h"

namespace pheml::phe {
namespace {

class PaillierTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    Rng rng(11);
    kp_ = new PaillierKeyPair(PaillierKeygen(512, rng));
  }
  static void TearDownTestSuite() { delete kp_; }

  PaillierCiphertext Enc(const BigInt& m) {
    return PaillierEncrypt(kp_->pub, m, rng_);
  }
  BigInt Dec(const PaillierCiphertext& c) { return PaillierDecrypt(kp_->priv, c); }

  static PaillierKeyPair* kp_;
  Rng rng_{5};
};
PaillierKeyPair* PaillierTest::kp_ = nullptr;

TEST(PaillierToy, EncryptsWithKnownNonce) {
  const PaillierKeyPair kp = MakePaillierKeyPair(5, 7);
  EXPECT_EQ(kp.pub.n, 35);
  const PaillierCiphertext c = PaillierEncryptWithNonce(kp.pub, 4, 2);
  EXPECT_EQ(c.value, 88);
  EXPECT_EQ(PaillierDecrypt(kp.priv, c), 4);
  EXPECT_EQ(oracle::PaillierEncryptDirect(35, 4, 2), 88);
}

TEST_F(PaillierTest, KeyHasRequestedSize) {
  EXPECT_EQ(BitLength(kp_->pub.n), 512u);
  EXPECT_EQ(kp_->priv.p * kp_->priv.q, kp_->pub.n);
  EXPECT_EQ(Gcd(kp_->pub.n, kp_->priv.phi), 1);
}

TEST_F(PaillierTest, ZeroRoundTrips) { EXPECT_EQ(Dec(Enc(0)), 0); }

TEST_F(PaillierTest, ProbabilisticEncryption) {
  const PaillierCiphertext a = Enc(42);
  const PaillierCiphertext b = Enc(42);
  EXPECT_NE(a.value, b.value);
  EXPECT_EQ(Dec(a), Dec(b));
}

TEST_F(PaillierTest, AdditiveExamples) {
  const PaillierPublicKey& pk = kp_->pub;
  EXPECT_EQ(Dec(PaillierAdd(pk, Enc(0), Enc(17))), 17);
  EXPECT_EQ(Dec(PaillierAdd(pk, Enc(2), Enc(3))), 5);
  EXPECT_EQ(Dec(PaillierAdd(pk, Enc(pk.n - 1), Enc(1))), 0);
  EXPECT_EQ(Dec(PaillierSub(pk, Enc(9), Enc(9))), 0);
  EXPECT_EQ(Dec(PaillierSub(pk, Enc(7), Enc(3))), 4);
  EXPECT_EQ(Dec(PaillierSub(pk, Enc(3), Enc(7))), pk.n - 4);
  EXPECT_EQ(Dec(PaillierScalarPow(pk, Enc(9), 1)), 9);
  EXPECT_EQ(Dec(PaillierScalarPow(pk, Enc(6), 7)), 42);
  EXPECT_EQ(Dec(PaillierScalarPow(pk, Enc(5), -1)), pk.n - 5);
}

TEST_F(PaillierTest, Rerandomize) {
  const PaillierCiphertext c0 = Enc(12);
  const PaillierCiphertext c1 = PaillierRerandomize(kp_->pub, c0, rng_);
  const PaillierCiphertext c2 = PaillierRerandomize(kp_->pub, c1, rng_);
  EXPECT_NE(c0.value, c1.value);
  EXPECT_NE(c1.value, c2.value);
  EXPECT_NE(c0.value, c2.value);
  EXPECT_EQ(Dec(c2), 12);
  EXPECT_EQ(Dec(PaillierRerandomize(kp_->pub, Enc(0), rng_)), 0);
}

TEST_F(PaillierTest, RejectsForeignCiphertext) {
  Rng rng(12);
  const PaillierKeyPair other = PaillierKeygen(512, rng);
  const PaillierCiphertext c = PaillierEncrypt(other.pub, 3, rng);
  try {
    Dec(c);
    FAIL() << "expected a wrong-key error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongKey);
  }
}

TEST_F(PaillierTest, RejectsOutOfRangePlaintext) {
  EXPECT_THROW(Enc(kp_->pub.n), Error);
  EXPECT_THROW(Enc(-1), Error);
}

TEST(PaillierKeygen, DeterministicUnderSeed) {
  Rng a(99);
  Rng b(99);
  EXPECT_EQ(PaillierKeygen(512, a).pub.n, PaillierKeygen(512, b).pub.n);
}

TEST(PaillierKeygen, RejectsUnsupportedSize) {
  Rng rng(1);
  EXPECT_THROW(PaillierKeygen(1000, rng), Error);
}

TEST(PaillierKeygen, LargeKeyMatchesDirectFormulas) {
  Rng rng(2048);
  const PaillierKeyPair kp = PaillierKeygen(2048, rng);
  EXPECT_EQ(BitLength(kp.pub.n), 2048u);
  for (int i = 0; i < 100; ++i) {
    const BigInt m = rng.UniformBelow(kp.pub.n);
    const BigInt r = rng.UniformUnit(kp.pub.n);
    const PaillierCiphertext c = PaillierEncryptWithNonce(kp.pub, m, r);
    ASSERT_EQ(c.value, oracle::PaillierEncryptDirect(kp.pub.n, m, r));
    ASSERT_EQ(PaillierDecrypt(kp.priv, c), m);
    ASSERT_EQ(oracle::PaillierDecryptDirect(kp.pub.n, kp.priv.phi, c.value), m);
  }
}

TEST(CloudRsaToy, HandCheckedValues) {
  const CloudRsaKeyMaterial key = MakeCloudRsaKey(5, 7, 5);
  EXPECT_EQ(key.n, 35);
  EXPECT_EQ(key.dec_exp, 5);
  const CloudRsaEncryptionKey ek = key.EncryptionKey();
  const CloudRsaCiphertext c2 = CloudRsaEncrypt(ek, 2);
  const CloudRsaCiphertext c3 = CloudRsaEncrypt(ek, 3);
  EXPECT_EQ(c2.value, 32);
  EXPECT_EQ(c3.value, 33);
  EXPECT_EQ(CloudRsaEncrypt(ek, 1).value, 1);
  EXPECT_EQ(CloudRsaDecrypt(key, c2), 2);
  EXPECT_EQ(CloudRsaDecrypt(key, CloudRsaCiphertext{6, key.key_id}), 6);
  const CloudRsaCiphertext prod = CloudRsaMul(key.Public(), c2, c3);
  EXPECT_EQ(prod.value, 6);
  EXPECT_EQ(CloudRsaDecrypt(key, prod), 6);
  EXPECT_EQ(oracle::RsaPowNaive(2, 5, 35), 32);
}

class CloudRsaTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    Rng rng(21);
    key_ = new CloudRsaKeyMaterial(CloudRsaKeygen(512, rng));
  }
  static void TearDownTestSuite() { delete key_; }
  static CloudRsaKeyMaterial* key_;
};
CloudRsaKeyMaterial* CloudRsaTest::key_ = nullptr;

TEST_F(CloudRsaTest, RoundTripsUnits) {
  Rng rng(3);
  const CloudRsaEncryptionKey ek = key_->EncryptionKey();
  for (int i = 0; i < 100; ++i) {
    const BigInt m = rng.UniformUnit(key_->n);
    const CloudRsaCiphertext c = CloudRsaEncrypt(ek, m);
    ASSERT_EQ(c, CloudRsaEncryptPrivate(*key_, m));
    ASSERT_EQ(CloudRsaDecrypt(*key_, c), m);
  }
  EXPECT_EQ(Gcd(key_->enc_exp, (key_->p - 1) * (key_->q - 1)), 1);
}

TEST_F(CloudRsaTest, PowersAndProducts) {
  const CloudRsaEncryptionKey ek = key_->EncryptionKey();
  const CloudRsaPublicKey pk = key_->Public();
  EXPECT_EQ(CloudRsaDecrypt(*key_, CloudRsaPow(pk, CloudRsaEncrypt(ek, 110), 1)),
            110);
  EXPECT_EQ(CloudRsaDecrypt(*key_, CloudRsaPow(pk, CloudRsaEncrypt(ek, 122), 2)),
            14884);
  EXPECT_EQ(CloudRsaDecrypt(*key_, CloudRsaPow(pk, CloudRsaEncrypt(ek, 122), 0)),
            1);
  const CloudRsaCiphertext c = CloudRsaEncrypt(ek, 7);
  CloudRsaCiphertext acc = CloudRsaEncrypt(ek, 1);
  for (int k = 0; k < 9; ++k) acc = CloudRsaMul(pk, acc, c);
  EXPECT_EQ(CloudRsaDecrypt(*key_, acc), PowMod(7, 9, key_->n));
}

TEST(CloudRsaKeygen, DeterministicAndSized) {
  Rng a(4);
  Rng b(4);
  const CloudRsaKeyMaterial ka = CloudRsaKeygen(1024, a);
  const CloudRsaKeyMaterial kb = CloudRsaKeygen(1024, b);
  EXPECT_EQ(ka.n, kb.n);
  EXPECT_EQ(ka.enc_exp, kb.enc_exp);
  EXPECT_EQ(BitLength(ka.n), 1024u);
  Rng c(4);
  EXPECT_THROW(CloudRsaKeygen(700, c), Error);
}

TEST(KeyIo, PaillierRoundTrip) {
  Rng rng(8);
  const PaillierKeyPair kp = PaillierKeygen(512, rng);
  const PaillierPublicKey pub =
      ParsePaillierPublicKey(SerializePaillierPublicKey(kp.pub));
  EXPECT_EQ(pub.n, kp.pub.n);
  EXPECT_EQ(pub.key_id, kp.pub.key_id);
  const PaillierKeyPair back =
      ParsePaillierPrivateKey(SerializePaillierPrivateKey(kp.priv));
  EXPECT_EQ(back.priv.phi, kp.priv.phi);
  const PaillierCiphertext c = PaillierEncrypt(kp.pub, 77, rng);
  EXPECT_EQ(ParsePaillierCiphertext(SerializeCiphertext(c)), c);
}

TEST(KeyIo, CloudRsaPublicFormWithholdsDecryptionExponent) {
  Rng rng(9);
  const CloudRsaKeyMaterial key = CloudRsaKeygen(512, rng);
  const nlohmann::json pub = nlohmann::json::parse(SerializeCloudRsaKey(key, true));
  EXPECT_FALSE(pub.contains("d"));
  EXPECT_FALSE(pub.contains("p"));
  EXPECT_EQ(ParseCloudRsaPublicKey(pub.dump()).n, key.n);
  const CloudRsaKeyMaterial back =
      ParseCloudRsaKey(SerializeCloudRsaKey(key, false));
  EXPECT_EQ(back.dec_exp, key.dec_exp);
  EXPECT_EQ(back.key_id, key.key_id);
}

TEST(Prime, ClassifiesKnownValues) {
  Rng rng(1);
  EXPECT_TRUE(IsProbablePrime(2, rng));
  EXPECT_TRUE(IsProbablePrime(1999, rng));
  EXPECT_TRUE(IsProbablePrime(BigInt("170141183460469231731687303715884105727"),
                              rng));
  EXPECT_FALSE(IsProbablePrime(1, rng));
  EXPECT_FALSE(IsProbablePrime(561, rng));
  EXPECT_FALSE(IsProbablePrime(BigInt(65537) * 65539, rng));
}

TEST(Prime, GeneratesExactBitLength) {
  Rng rng(6);
  for (std::size_t bits : {16u, 64u, 256u}) {
    const BigInt p = GeneratePrime(bits, rng);
    EXPECT_EQ(BitLength(p), bits);
    EXPECT_TRUE(IsProbablePrime(p, rng));
  }
}

}  // namespace
}  // namespace pheml::phe
