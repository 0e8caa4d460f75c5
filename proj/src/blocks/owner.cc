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
#include "pheml/blocks/parties.h"

#include "pheml/common/error.h"
#include "pheml/net/audit.h"

namespace pheml::blocks {

using net::Envelope;
using net::Json;
using net::Message;

const phe::PaillierPublicKey& Directory::FindPaillier(
    const std::string& key_id) const {
  if (demander.key_id == key_id) return demander;
  for (const auto& [_, o] : owners) {
    if (o.paillier.key_id == key_id) return o.paillier;
  }
  throw Error(ErrorCode::kProtocolAbort, "no public key for " + key_id);
}

const OwnerPublic& Directory::Owner(int index) const {
  auto it = owners.find(index);
  if (it == owners.end()) {
    throw Error(ErrorCode::kProtocolAbort,
                "unknown owner " + std::to_string(index));
  }
  return it->second;
}

BigInt Directory::MinModulus() const {
  BigInt out = demander.n;
  for (const auto& [_, o] : owners) {
    if (o.paillier.n < out) out = o.paillier.n;
  }
  return out;
}

MaskRange ComputeMaskRange(const Directory& dir, int n_owners) {
  const BigInt n_min = dir.MinModulus();
  const long bits = static_cast<long>(BitLength(n_min));
  if (bits < kMaskSecurityBits + 8) {
    throw Error(ErrorCode::kInvalidArgument, "modulus too small for masking");
  }
  MaskRange r;
  r.m = BigInt(1) << (bits - kMaskSecurityBits - 2);
  r.lo = r.m;
  r.hi = n_min - r.m;
  r.sum_noise_bound = r.m / (2 * n_owners);
  return r;
}

Owner::Owner(int index, net::Session& session, phe::PaillierKeyPair paillier,
             std::optional<phe::CloudRsaKeyMaterial> rsa, Rng rng)
    : index_(index),
      session_(session),
      paillier_(std::move(paillier)),
      rsa_(std::move(rsa)),
      rng_(std::move(rng)) {
  session_.RegisterKey(paillier_.pub.key_id, id());
  if (rsa_) session_.RegisterKey(rsa_->key_id, id());
  session_.RegisterHandler(id(),
                           [this](const Envelope& e) { return Handle(e); });
}

OwnerPublic Owner::Public() const {
  OwnerPublic out{paillier_.pub, std::nullopt};
  if (rsa_) out.rsa = rsa_->EncryptionKey();
  return out;
}

void Owner::SetSumSource(const std::string& family,
                         std::vector<BigInt> values) {
  sum_sources_[family] = std::move(values);
}

Message Owner::Handle(const Envelope& request) {
  const std::string& k = request.msg.kind;
  if (k == net::kind::kExpRequest) return HandleExpRequest(request);
  if (k == net::kind::kBb7Request) return HandleBb7(request);
  if (k == net::kind::kSigmoidRequest) return HandleSigmoid(request);
  if (k == net::kind::kKeySwitchRequest) return HandleKeySwitch(request);
  if (k == net::kind::kSignRequest) return HandleSign(request);
  if (k == net::kind::kSumRequest) return HandleSum(request);
  throw Error(ErrorCode::kProtocolAbort, "owner cannot handle " + k);
}

BigInt Owner::DecryptOwn(const phe::PaillierCiphertext& c) {
  phe::ValidatePaillierCiphertext(paillier_.pub, c);
  BigInt m = phe::PaillierDecrypt(paillier_.priv, c);
  session_.NoteReceived(id(), m);
  return m;
}

const phe::CloudRsaKeyMaterial& Owner::RsaKey() const {
  if (!rsa_) {
    throw Error(ErrorCode::kProtocolAbort,
                id().ToString() + " has no Cloud-RSA key");
  }
  return *rsa_;
}

const std::vector<BigInt>& Owner::Record(std::size_t i) const {
  if (i >= x_.size()) {
    throw Error(ErrorCode::kProtocolAbort,
                "record " + std::to_string(i) + " is not held by " +
                    id().ToString());
  }
  return x_[i];
}

Message Owner::HandleExpRequest(const Envelope& request) {
  const auto record = request.msg.payload.at("record").get<std::size_t>();
  auto it = exp_cache_.find(record);
  if (it == exp_cache_.end()) {
    const phe::CloudRsaKeyMaterial& key = RsaKey();
    ExpEncodedVector ev;
    for (const BigInt& x : Record(record)) {
      const double v = encoding::FxDecode(x, encoding::kProtocolScale);
      for (int sign : {+1, -1}) {
        BigInt base = encoding::BumpToUnit(encoding::ExpMantissa(sign * v),
                                           key.n, &coprime_bumps_);
        ScaledRsa ct{phe::CloudRsaEncryptPrivate(key, base),
                     encoding::kProtocolScale, Taint::Cipher()};
        (sign > 0 ? ev.pos : ev.neg).push_back(ct);
      }
    }
    it = exp_cache_.emplace(record, std::move(ev)).first;
  }
  Json pos = Json::array();
  Json neg = Json::array();
  for (const ScaledRsa& c : it->second.pos) pos.push_back(net::CtToJson(c.ct));
  for (const ScaledRsa& c : it->second.neg) neg.push_back(net::CtToJson(c.ct));
  return Message{net::kind::kExpVector, encoding::kProtocolScale,
                 Taint::Cipher(), Json{{"pos", pos}, {"neg", neg}}};
}

Message Owner::HandleBb7(const Envelope& request) {
  const phe::CloudRsaKeyMaterial& key = RsaKey();
  const Json& p = request.msg.payload;
  const phe::CloudRsaCiphertext int_ct = net::RsaCtFromJson(p.at("int"));
  const phe::CloudRsaCiphertext frac_ct = net::RsaCtFromJson(p.at("frac"));
  phe::ValidateCloudRsaCiphertext(key.Public(), int_ct);
  phe::ValidateCloudRsaCiphertext(key.Public(), frac_ct);
  const BigInt int_m = phe::CloudRsaDecrypt(key, int_ct);
  const BigInt frac_m = phe::CloudRsaDecrypt(key, frac_ct);
  session_.NoteReceived(id(), int_m);
  session_.NoteReceived(id(), frac_m);
  const int out_scale = p.at("out_scale").get<int>();
  const double v = encoding::RecoverPower(int_m, p.at("int_scale").get<int>(),
                                          frac_m,
                                          p.at("frac_scale").get<int>());
  const BigInt w = encoding::FxEncode(v, out_scale);
  Json reply{{"ct", net::CtToJson(phe::PaillierEncrypt(
                        paillier_.pub, encoding::ToResidue(w, paillier_.pub.n),
                        rng_))}};
  return Message{net::kind::kBb7Reply, out_scale, Taint::Cipher(), reply};
}

Message Owner::HandleSigmoid(const Envelope& request) {
  const Json& p = request.msg.payload;
  const BigInt den = encoding::FromResidue(
      DecryptOwn(net::PaillierCtFromJson(p.at("den"))), paillier_.pub.n);
  if (den <= 0) {
    throw Error(ErrorCode::kProtocolAbort, "sigmoid denominator must be > 0");
  }
  const int den_scale = p.at("den_scale").get<int>();
  const int out_scale = p.at("out_scale").get<int>();
  const int shift = out_scale + den_scale - encoding::kProtocolScale;
  if (shift < 0) throw Error(ErrorCode::kScaleMismatch, "bad sigmoid scales");
  const BigInt unit = Pow10(static_cast<unsigned>(shift));
  Json cts = Json::array();
  for (const BigInt& x : Record(p.at("record").get<std::size_t>())) {
    const BigInt s = TruncDiv(x * unit, den);
    cts.push_back(net::CtToJson(phe::PaillierEncrypt(
        paillier_.pub, encoding::ToResidue(s, paillier_.pub.n), rng_)));
  }
  return Message{net::kind::kSigmoidReply, out_scale, Taint::Cipher(),
                 Json{{"cts", cts}}};
}

Message Owner::HandleKeySwitch(const Envelope& request) {
  const Json& p = request.msg.payload;
  const phe::PaillierPublicKey& target =
      dir_.FindPaillier(p.at("target").get<std::string>());
  Json cts = Json::array();
  for (const Json& c : p.at("cts")) {
    // Masked values are non-negative integers below every modulus.
    const BigInt masked = DecryptOwn(net::PaillierCtFromJson(c));
    cts.push_back(
        net::CtToJson(phe::PaillierEncrypt(target, masked, rng_)));
  }
  Json reply{{"cts", cts}, {"scales", p.at("scales")}};
  return Message{net::kind::kKeySwitchReply, request.msg.scale,
                 Taint::Cipher(), reply};
}

Message Owner::HandleSign(const Envelope& request) {
  const BigInt v = encoding::FromResidue(
      DecryptOwn(net::PaillierCtFromJson(request.msg.payload.at("ct"))),
      paillier_.pub.n);
  return Message{net::kind::kSignBit, 0, Taint::Public(),
                 Json(v > 0 ? "1" : "0")};
}

Message Owner::HandleSum(const Envelope& request) {
  const std::string family =
      request.msg.payload.at("family").get<std::string>();
  auto it = sum_sources_.find(family);
  if (it == sum_sources_.end()) {
    throw Error(ErrorCode::kProtocolAbort,
                id().ToString() + " has no statistics for " + family);
  }
  const MaskRange range = ComputeMaskRange(dir_, session_.n_owners());
  Json masked = Json::array();
  Json noise = Json::array();
  for (const BigInt& a : it->second) {
    // Keeps the sum of all shares below the mask bound M.
    if (abs(a) >= range.sum_noise_bound) {
      throw Error(ErrorCode::kBudgetExceeded, "summand too large to mask");
    }
    const BigInt r = rng_.UniformBelow(range.sum_noise_bound);
    masked.push_back(net::IntToJson(a + r));
    noise.push_back(
        net::CtToJson(phe::PaillierEncrypt(paillier_.pub, r, rng_)));
  }
  return Message{net::kind::kSumShare, request.msg.scale,
                 Taint::Blinded(session_.NewNonceId()),
                 Json{{"masked", masked}, {"noise", noise}}};
}

BigInt DemanderContext::Decrypt(const ScaledPaillier& c) {
  phe::ValidatePaillierCiphertext(keys.pub, c.ct);
  const BigInt m = phe::PaillierDecrypt(keys.priv, c.ct);
  session->NoteReceived(id(), m);
  return encoding::FromResidue(m, keys.pub.n);
}

}  // namespace pheml::blocks
