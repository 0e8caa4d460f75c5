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
#include "pheml/phe/cloud_rsa.h"

#include <algorithm>
#include <cstdio>

#include "pheml/common/error.h"
#include "pheml/phe/prime.h"

namespace pheml::phe {
namespace {

// Size of the secret encryption exponent. It is shared only with the
// session demander, so it is drawn at random rather than fixed at 65537.
constexpr std::size_t kEncExpBits = 256;

void CheckSameKey(const KeyId& expected, const KeyId& actual) {
  if (expected != actual) {
    throw Error(ErrorCode::kWrongKey,
                "ciphertext key " + actual + " does not match key " + expected);
  }
}

KeyId CloudRsaKeyId(const BigInt& n) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(
                    Fnv1a64("cloudrsa:" + ToHex(n))));
  return "r-" + std::string(buf);
}

}  // namespace

CloudRsaPublicKey MakeCloudRsaPublicKey(const BigInt& n) {
  return CloudRsaPublicKey{n, CloudRsaKeyId(n)};
}

CloudRsaKeyMaterial MakeCloudRsaKey(const BigInt& p, const BigInt& q,
                                    const BigInt& enc_exp) {
  if (p == q) {
    throw Error(ErrorCode::kInvalidArgument, "RSA primes must differ");
  }
  const BigInt phi = (p - 1) * (q - 1);
  if (enc_exp <= 1 || Gcd(enc_exp, phi) != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "encryption exponent must be > 1 and coprime with phi(N)");
  }
  CloudRsaKeyMaterial key;
  key.n = p * q;
  key.enc_exp = enc_exp;
  key.dec_exp = ModInverse(enc_exp, phi);
  key.p = p;
  key.q = q;
  key.key_id = CloudRsaKeyId(key.n);
  key.dp = Mod(key.dec_exp, p - 1);
  key.dq = Mod(key.dec_exp, q - 1);
  key.q_inv = ModInverse(q, p);
  return key;
}

CloudRsaKeyMaterial CloudRsaKeygen(int bits, Rng& rng) {
  if (bits < 512 || bits % 512 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "Cloud-RSA key size must be a multiple of 512 (got " +
                    std::to_string(bits) + ")");
  }
  PrimePair pq = GeneratePrimePair(static_cast<std::size_t>(bits), rng);
  const BigInt phi = (pq.p - 1) * (pq.q - 1);
  const std::size_t e_bits = std::min(kEncExpBits, BitLength(phi) - 1);
  for (int attempt = 0; attempt < kPrimeRetryBound; ++attempt) {
    BigInt e = rng.RandomBits(e_bits);
    mpz_setbit(e.get_mpz_t(), e_bits - 1);
    mpz_setbit(e.get_mpz_t(), 0);
    if (e > 1 && e < phi && Gcd(e, phi) == 1) {
      return MakeCloudRsaKey(pq.p, pq.q, e);
    }
  }
  throw Error(ErrorCode::kGenerationFailure, "no admissible exponent");
}

CloudRsaCiphertext CloudRsaEncrypt(const CloudRsaEncryptionKey& key,
                                   const BigInt& m) {
  if (m <= 0 || m >= key.pub.n || Gcd(m, key.pub.n) != 1) {
    throw Error(ErrorCode::kEncoding,
                "Cloud-RSA plaintext must be a unit of Z_N");
  }
  return CloudRsaCiphertext{PowMod(m, key.enc_exp, key.pub.n),
                            key.pub.key_id};
}

CloudRsaCiphertext CloudRsaEncryptPrivate(const CloudRsaKeyMaterial& key,
                                          const BigInt& m) {
  if (m <= 0 || m >= key.n || Gcd(m, key.n) != 1) {
    throw Error(ErrorCode::kEncoding,
                "Cloud-RSA plaintext must be a unit of Z_N");
  }
  BigInt cp = PowMod(Mod(m, key.p), Mod(key.enc_exp, key.p - 1), key.p);
  BigInt cq = PowMod(Mod(m, key.q), Mod(key.enc_exp, key.q - 1), key.q);
  BigInt h = Mod((cp - cq) * key.q_inv, key.p);
  return CloudRsaCiphertext{cq + h * key.q, key.key_id};
}

BigInt CloudRsaDecrypt(const CloudRsaKeyMaterial& key,
                       const CloudRsaCiphertext& c) {
  CheckSameKey(key.key_id, c.key_id);
  BigInt mp = PowMod(Mod(c.value, key.p), key.dp, key.p);
  BigInt mq = PowMod(Mod(c.value, key.q), key.dq, key.q);
  BigInt h = Mod((mp - mq) * key.q_inv, key.p);
  return mq + h * key.q;
}

CloudRsaCiphertext CloudRsaMul(const CloudRsaPublicKey& pk,
                               const CloudRsaCiphertext& c1,
                               const CloudRsaCiphertext& c2) {
  CheckSameKey(pk.key_id, c1.key_id);
  CheckSameKey(pk.key_id, c2.key_id);
  return CloudRsaCiphertext{Mod(c1.value * c2.value, pk.n), pk.key_id};
}

CloudRsaCiphertext CloudRsaPow(const CloudRsaPublicKey& pk,
                               const CloudRsaCiphertext& c, const BigInt& k) {
  CheckSameKey(pk.key_id, c.key_id);
  if (k < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "Cloud-RSA exponent must be non-negative");
  }
  return CloudRsaCiphertext{PowMod(c.value, k, pk.n), pk.key_id};
}

void ValidateCloudRsaCiphertext(const CloudRsaPublicKey& pk,
                                const CloudRsaCiphertext& c) {
  CheckSameKey(pk.key_id, c.key_id);
  if (c.value <= 0 || c.value >= pk.n || Gcd(c.value, pk.n) != 1) {
    throw Error(ErrorCode::kMalformedCiphertext,
                "Cloud-RSA ciphertext is not a unit of Z_N");
  }
}

}  // namespace pheml::phe
