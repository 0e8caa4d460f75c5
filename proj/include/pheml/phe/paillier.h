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
#ifndef PHEML_PHE_PAILLIER_H_
#define PHEML_PHE_PAILLIER_H_

#include <string>

#include "pheml/common/bigint.h"
#include "pheml/common/rng.h"

namespace pheml::phe {

// Opaque key identifier derived from the modulus; ciphertexts carry the id
// of the key they were produced under.
using KeyId = std::string;

struct PaillierPublicKey {
  BigInt n;
  BigInt n_sq;
  KeyId key_id;
};

struct PaillierPrivateKey {
  BigInt n;
  BigInt phi;      // (p-1)(q-1)
  BigInt phi_inv;  // phi^-1 mod n
  BigInt p;
  BigInt q;
  KeyId key_id;

  // CRT decryption constants, filled in by MakePaillierKeyPair.
  BigInt p_sq;
  BigInt q_sq;
  BigInt hp;     // L_p((1+n)^(p-1) mod p^2)^-1 mod p
  BigInt hq;
  BigInt p_inv;  // p^-1 mod q
};

struct PaillierKeyPair {
  PaillierPublicKey pub;
  PaillierPrivateKey priv;
};

struct PaillierCiphertext {
  BigInt value;
  KeyId key_id;

  friend bool operator==(const PaillierCiphertext&,
                         const PaillierCiphertext&) = default;
};

// bits must be one of 512, 1024, 2048, 4096.
PaillierKeyPair PaillierKeygen(int bits, Rng& rng);

// Builds a key pair from known primes. Used for fixtures and hand-checkable
// toy moduli; no size restriction.
PaillierKeyPair MakePaillierKeyPair(const BigInt& p, const BigInt& q);
PaillierPublicKey MakePaillierPublicKey(const BigInt& n);

// c = (1+N)^m r^N mod N^2 with r uniform in Z_N^*. Requires 0 <= m < N.
PaillierCiphertext PaillierEncrypt(const PaillierPublicKey& pk, const BigInt& m,
                                   Rng& rng);
// Same, with caller-chosen r (must be a unit mod N).
PaillierCiphertext PaillierEncryptWithNonce(const PaillierPublicKey& pk,
                                            const BigInt& m, const BigInt& r);

BigInt PaillierDecrypt(const PaillierPrivateKey& sk,
                       const PaillierCiphertext& c);

PaillierCiphertext PaillierAdd(const PaillierPublicKey& pk,
                               const PaillierCiphertext& c1,
                               const PaillierCiphertext& c2);
// c1 * c2^-1 mod N^2; decrypts to (m1 - m2) mod N.
PaillierCiphertext PaillierSub(const PaillierPublicKey& pk,
                               const PaillierCiphertext& c1,
                               const PaillierCiphertext& c2);
// c^k mod N^2; decrypts to (m*k) mod N. k may be negative.
PaillierCiphertext PaillierScalarPow(const PaillierPublicKey& pk,
                                     const PaillierCiphertext& c,
                                     const BigInt& k);
PaillierCiphertext PaillierRerandomize(const PaillierPublicKey& pk,
                                       const PaillierCiphertext& c, Rng& rng);

// Range and coprimality check applied to every received ciphertext.
void ValidatePaillierCiphertext(const PaillierPublicKey& pk,
                                const PaillierCiphertext& c);

}  // namespace pheml::phe

#endif  // PHEML_PHE_PAILLIER_H_
