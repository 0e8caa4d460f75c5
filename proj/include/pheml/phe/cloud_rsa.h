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
#ifndef PHEML_PHE_CLOUD_RSA_H_
#define PHEML_PHE_CLOUD_RSA_H_

#include "pheml/common/bigint.h"
#include "pheml/common/rng.h"
#include "pheml/phe/paillier.h"

namespace pheml::phe {

// Multiplicatively homomorphic, unpadded RSA. The modulus is public; both
// exponents are private to the owner, except that the owner hands enc_exp to
// the session's demander so it can encrypt blinding factors. dec_exp never
// leaves the owner.
struct CloudRsaPublicKey {
  BigInt n;
  KeyId key_id;
};

struct CloudRsaEncryptionKey {
  CloudRsaPublicKey pub;
  BigInt enc_exp;
};

struct CloudRsaKeyMaterial {
  BigInt n;
  BigInt enc_exp;  // e
  BigInt dec_exp;  // d = e^-1 mod phi(N)
  BigInt p;
  BigInt q;
  KeyId key_id;

  // CRT constants.
  BigInt dp;
  BigInt dq;
  BigInt q_inv;  // q^-1 mod p

  CloudRsaPublicKey Public() const { return {n, key_id}; }
  CloudRsaEncryptionKey EncryptionKey() const { return {Public(), enc_exp}; }
};

struct CloudRsaCiphertext {
  BigInt value;
  KeyId key_id;

  friend bool operator==(const CloudRsaCiphertext&,
                         const CloudRsaCiphertext&) = default;
};

// bits must be a multiple of 512. The standard sizes are 512 to 4096; power
// products over many features need larger moduli.
CloudRsaKeyMaterial CloudRsaKeygen(int bits, Rng& rng);

// Toy and fixture keys; e must be invertible mod phi.
CloudRsaKeyMaterial MakeCloudRsaKey(const BigInt& p, const BigInt& q,
                                    const BigInt& enc_exp);
CloudRsaPublicKey MakeCloudRsaPublicKey(const BigInt& n);

// m^e mod N; m must be a unit mod N.
CloudRsaCiphertext CloudRsaEncrypt(const CloudRsaEncryptionKey& key,
                                   const BigInt& m);
// Owner-side encryption through the CRT; same result, about 4x faster.
CloudRsaCiphertext CloudRsaEncryptPrivate(const CloudRsaKeyMaterial& key,
                                          const BigInt& m);
BigInt CloudRsaDecrypt(const CloudRsaKeyMaterial& key,
                       const CloudRsaCiphertext& c);
CloudRsaCiphertext CloudRsaMul(const CloudRsaPublicKey& pk,
                               const CloudRsaCiphertext& c1,
                               const CloudRsaCiphertext& c2);
// c^k mod N for k >= 0; k = 0 gives the (deterministic) encryption of 1.
CloudRsaCiphertext CloudRsaPow(const CloudRsaPublicKey& pk,
                               const CloudRsaCiphertext& c, const BigInt& k);

void ValidateCloudRsaCiphertext(const CloudRsaPublicKey& pk,
                                const CloudRsaCiphertext& c);

}  // namespace pheml::phe

#endif  // PHEML_PHE_CLOUD_RSA_H_
