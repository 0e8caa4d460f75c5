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
#include "pheml/phe/paillier.h"

#include <cstdio>

#include "pheml/common/error.h"
#include "pheml/phe/prime.h"

namespace pheml::phe {
namespace {

void CheckKeyBits(int bits) {
  if (bits != 512 && bits != 1024 && bits != 2048 && bits != 4096) {
    throw Error(ErrorCode::kInvalidArgument,
                "key size must be one of 512, 1024, 2048, 4096 (got " +
                    std::to_string(bits) + ")");
  }
}

void CheckSameKey(const KeyId& expected, const KeyId& actual) {
  if (expected != actual) {
    throw Error(ErrorCode::kWrongKey,
                "ciphertext key " + actual + " does not match key " + expected);
  }
}

KeyId PaillierKeyId(const BigInt& n) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(
                    Fnv1a64("paillier:" + ToHex(n))));
  return "p-" + std::string(buf);
}

// L_x(u) = (u - 1) / x
BigInt LFunction(const BigInt& u, const BigInt& x) { return (u - 1) / x; }

}  // namespace

PaillierPublicKey MakePaillierPublicKey(const BigInt& n) {
  return PaillierPublicKey{n, n * n, PaillierKeyId(n)};
}

PaillierKeyPair MakePaillierKeyPair(const BigInt& p, const BigInt& q) {
  if (p == q) {
    throw Error(ErrorCode::kInvalidArgument, "Paillier primes must differ");
  }
  PaillierKeyPair kp;
  kp.pub = MakePaillierPublicKey(p * q);
  PaillierPrivateKey& sk = kp.priv;
  sk.n = kp.pub.n;
  sk.p = p;
  sk.q = q;
  sk.phi = (p - 1) * (q - 1);
  if (Gcd(sk.n, sk.phi) != 1) {
    throw Error(ErrorCode::kInvalidArgument, "gcd(N, phi(N)) != 1");
  }
  sk.phi_inv = ModInverse(sk.phi, sk.n);
  sk.key_id = kp.pub.key_id;
  sk.p_sq = p * p;
  sk.q_sq = q * q;
  const BigInt g = sk.n + 1;
  sk.hp = ModInverse(LFunction(PowMod(g, p - 1, sk.p_sq), p), p);
  sk.hq = ModInverse(LFunction(PowMod(g, q - 1, sk.q_sq), q), q);
  sk.p_inv = ModInverse(p, q);
  return kp;
}

PaillierKeyPair PaillierKeygen(int bits, Rng& rng) {
  CheckKeyBits(bits);
  PrimePair pq = GeneratePrimePair(static_cast<std::size_t>(bits), rng);
  return MakePaillierKeyPair(pq.p, pq.q);
}

PaillierCiphertext PaillierEncryptWithNonce(const PaillierPublicKey& pk,
                                            const BigInt& m, const BigInt& r) {
  if (m < 0 || m >= pk.n) {
    throw Error(ErrorCode::kEncoding, "Paillier plaintext outside [0, N)");
  }
  // (1+N)^m = 1 + mN (mod N^2)
  BigInt gm = Mod(1 + m * pk.n, pk.n_sq);
  BigInt rn = PowMod(r, pk.n, pk.n_sq);
  return PaillierCiphertext{Mod(gm * rn, pk.n_sq), pk.key_id};
}

PaillierCiphertext PaillierEncrypt(const PaillierPublicKey& pk, const BigInt& m,
                                   Rng& rng) {
  return PaillierEncryptWithNonce(pk, m, rng.UniformUnit(pk.n));
}

BigInt PaillierDecrypt(const PaillierPrivateKey& sk,
                       const PaillierCiphertext& c) {
  CheckSameKey(sk.key_id, c.key_id);
  // CRT: m_p = L_p(c^(p-1) mod p^2) * hp mod p, likewise for q.
  BigInt mp = Mod(LFunction(PowMod(c.value, sk.p - 1, sk.p_sq), sk.p) * sk.hp,
                  sk.p);
  BigInt mq = Mod(LFunction(PowMod(c.value, sk.q - 1, sk.q_sq), sk.q) * sk.hq,
                  sk.q);
  BigInt h = Mod((mq - mp) * sk.p_inv, sk.q);
  return mp + h * sk.p;
}

PaillierCiphertext PaillierAdd(const PaillierPublicKey& pk,
                               const PaillierCiphertext& c1,
                               const PaillierCiphertext& c2) {
  CheckSameKey(pk.key_id, c1.key_id);
  CheckSameKey(pk.key_id, c2.key_id);
  return PaillierCiphertext{Mod(c1.value * c2.value, pk.n_sq), pk.key_id};
}

PaillierCiphertext PaillierSub(const PaillierPublicKey& pk,
                               const PaillierCiphertext& c1,
                               const PaillierCiphertext& c2) {
  CheckSameKey(pk.key_id, c1.key_id);
  CheckSameKey(pk.key_id, c2.key_id);
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), c2.value.get_mpz_t(),
                 pk.n_sq.get_mpz_t()) == 0) {
    throw Error(ErrorCode::kMalformedCiphertext,
                "subtrahend is not invertible mod N^2");
  }
  return PaillierCiphertext{Mod(c1.value * inv, pk.n_sq), pk.key_id};
}

PaillierCiphertext PaillierScalarPow(const PaillierPublicKey& pk,
                                     const PaillierCiphertext& c,
                                     const BigInt& k) {
  CheckSameKey(pk.key_id, c.key_id);
  return PaillierCiphertext{PowMod(c.value, k, pk.n_sq), pk.key_id};
}

PaillierCiphertext PaillierRerandomize(const PaillierPublicKey& pk,
                                       const PaillierCiphertext& c, Rng& rng) {
  CheckSameKey(pk.key_id, c.key_id);
  BigInt rn = PowMod(rng.UniformUnit(pk.n), pk.n, pk.n_sq);
  return PaillierCiphertext{Mod(c.value * rn, pk.n_sq), pk.key_id};
}

void ValidatePaillierCiphertext(const PaillierPublicKey& pk,
                                const PaillierCiphertext& c) {
  CheckSameKey(pk.key_id, c.key_id);
  if (c.value <= 0 || c.value >= pk.n_sq) {
    throw Error(ErrorCode::kMalformedCiphertext,
                "ciphertext outside [1, N^2)");
  }
  if (Gcd(c.value, pk.n) != 1) {
    throw Error(ErrorCode::kMalformedCiphertext,
                "ciphertext not coprime with N");
  }
}

}  // namespace pheml::phe
