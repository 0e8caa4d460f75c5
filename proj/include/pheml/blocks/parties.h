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
#ifndef PHEML_BLOCKS_PARTIES_H_
#define PHEML_BLOCKS_PARTIES_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pheml/blocks/local_ops.h"
#include "pheml/common/rng.h"
#include "pheml/net/session.h"
#include "pheml/phe/cloud_rsa.h"
#include "pheml/phe/paillier.h"

namespace pheml::blocks {

// Statistical hiding parameter for additive masks, in bits.
inline constexpr int kMaskSecurityBits = 40;

struct OwnerPublic {
  phe::PaillierPublicKey paillier;
  // Present when the owner holds Cloud-RSA material; carries e.
  std::optional<phe::CloudRsaEncryptionKey> rsa;
};

// Public keys known to every party after setup.
struct Directory {
  phe::PaillierPublicKey demander;
  std::map<int, OwnerPublic> owners;

  const phe::PaillierPublicKey& FindPaillier(const std::string& key_id) const;
  const OwnerPublic& Owner(int index) const;
  // Smallest Paillier modulus in the session.
  BigInt MinModulus() const;
};

// Additive masks r are drawn from [lo, hi) = [M, N_min - M) with
// M = 2^(b - 42), b the bit length of N_min. Any signed m with |m| < M then
// satisfies 0 < m + r < N_min, so a masked value has the same meaning under
// every key in the session. sum_noise_bound = M / (2n) bounds the per-owner
// noise of secure summation.
struct MaskRange {
  BigInt m;
  BigInt lo;
  BigInt hi;
  BigInt sum_noise_bound;
};
MaskRange ComputeMaskRange(const Directory& dir, int n_owners);

// A data owner: key material, local data, and the owner half of every
// interactive block.
class Owner {
 public:
  Owner(int index, net::Session& session, phe::PaillierKeyPair paillier,
        std::optional<phe::CloudRsaKeyMaterial> rsa, Rng rng);

  net::PartyId id() const { return net::PartyId::Owner(index_); }
  int index() const { return index_; }
  OwnerPublic Public() const;
  const phe::PaillierKeyPair& paillier() const { return paillier_; }
  const std::optional<phe::CloudRsaKeyMaterial>& rsa() const { return rsa_; }
  Rng& rng() { return rng_; }

  void SetDirectory(Directory dir) { dir_ = std::move(dir); }
  // Scale-2 feature mantissas of the local records, used by the
  // exponential-vector and sigmoid requests.
  void SetRecords(std::vector<std::vector<BigInt>> x) { x_ = std::move(x); }
  void SetSumSource(const std::string& family, std::vector<BigInt> values);

  // Dispatch target registered with the session.
  net::Message Handle(const net::Envelope& request);

  int coprime_bumps() const { return coprime_bumps_; }

 private:
  net::Message HandleExpRequest(const net::Envelope& request);
  net::Message HandleBb7(const net::Envelope& request);
  net::Message HandleSigmoid(const net::Envelope& request);
  net::Message HandleKeySwitch(const net::Envelope& request);
  net::Message HandleSign(const net::Envelope& request);
  net::Message HandleSum(const net::Envelope& request);

  BigInt DecryptOwn(const phe::PaillierCiphertext& c);
  const phe::CloudRsaKeyMaterial& RsaKey() const;
  const std::vector<BigInt>& Record(std::size_t i) const;

  int index_;
  net::Session& session_;
  phe::PaillierKeyPair paillier_;
  std::optional<phe::CloudRsaKeyMaterial> rsa_;
  Rng rng_;
  Directory dir_;
  std::vector<std::vector<BigInt>> x_;
  std::map<std::string, std::vector<BigInt>> sum_sources_;
  std::map<std::size_t, ExpEncodedVector> exp_cache_;
  int coprime_bumps_ = 0;
};

// Demander state shared by the demander halves of the blocks.
struct DemanderContext {
  net::Session* session = nullptr;
  phe::PaillierKeyPair keys;
  Directory directory;
  Rng crypto{0};     // encryption randomness and additive masks
  Rng exp_blind{0};  // exponents of the e^r blinding factors

  // Previous additive mask, replayed when the reuse_nonce fault is set.
  std::string last_mask_id;
  std::vector<BigInt> last_mask;

  int coprime_bumps = 0;

  static net::PartyId id() { return net::PartyId::Demander(); }
  // Decrypts under the demander key to a signed mantissa.
  BigInt Decrypt(const ScaledPaillier& c);
};

}  // namespace pheml::blocks

#endif  // PHEML_BLOCKS_PARTIES_H_
