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
#include "pheml/blocks/interactive.h"

#include "pheml/common/error.h"
#include "pheml/net/audit.h"

namespace pheml::blocks {
namespace {

using net::Json;
using net::Message;
using net::PartyId;

constexpr int kMaxBlindExponent = 8;
// Positive multiplicative blinding for sign tests: rho in [1, 2^32].
const BigInt kRhoMax = BigInt(1) << 32;

const phe::PaillierPublicKey& OwnerPaillier(const DemanderContext& ctx,
                                            int owner) {
  return ctx.directory.Owner(owner).paillier;
}

const phe::CloudRsaEncryptionKey& OwnerRsa(const DemanderContext& ctx,
                                           int owner) {
  const OwnerPublic& o = ctx.directory.Owner(owner);
  if (!o.rsa) {
    throw Error(ErrorCode::kProtocolAbort,
                "owner " + std::to_string(owner) + " announced no Cloud-RSA key");
  }
  return *o.rsa;
}

void CheckKey(const phe::PaillierPublicKey& pk, const ScaledPaillier& c) {
  phe::ValidatePaillierCiphertext(pk, c.ct);
}

}  // namespace

int DrawBlindExponent(Rng& rng) {
  int r = static_cast<int>(
      rng.UniformInt(-kMaxBlindExponent, kMaxBlindExponent - 1));
  return r >= 0 ? r + 1 : r;
}

ExpEncodedVector FetchExpVector(DemanderContext& ctx, int owner,
                                std::size_t record) {
  Message reply = ctx.session->Call(
      ctx.id(), PartyId::Owner(owner),
      Message{net::kind::kExpRequest, 0, Taint::Public(),
              Json{{"record", record}}});
  const phe::CloudRsaPublicKey& pk = OwnerRsa(ctx, owner).pub;
  ExpEncodedVector ev;
  for (const Json& c : reply.payload.at("pos")) {
    ev.pos.push_back({net::RsaCtFromJson(c), reply.scale, Taint::Cipher()});
    phe::ValidateCloudRsaCiphertext(pk, ev.pos.back().ct);
  }
  for (const Json& c : reply.payload.at("neg")) {
    ev.neg.push_back({net::RsaCtFromJson(c), reply.scale, Taint::Cipher()});
    phe::ValidateCloudRsaCiphertext(pk, ev.neg.back().ct);
  }
  return ev;
}

ScaledPaillier ConvertRsaToPaillierBlinded(DemanderContext& ctx, int owner,
                                           const PowResult& pr,
                                           const BigInt& blind,
                                           int out_scale) {
  const phe::CloudRsaEncryptionKey& ek = OwnerRsa(ctx, owner);
  const ScaledRsa b{
      phe::CloudRsaEncrypt(
          ek, encoding::BumpToUnit(blind, ek.pub.n, &ctx.coprime_bumps)),
      encoding::kBlindScale, Taint::Cipher()};
  const ScaledRsa int_ct = SecureCtMul(ek.pub, pr.int_ct, b);
  const ScaledRsa frac_ct = SecureCtMul(ek.pub, pr.frac_ct, b);
  const std::string nonce = ctx.session->NewNonceId();
  Message reply = ctx.session->Call(
      ctx.id(), PartyId::Owner(owner),
      Message{net::kind::kBb7Request, frac_ct.scale, Taint::Blinded(nonce),
              Json{{"int", net::CtToJson(int_ct.ct)},
                   {"int_scale", int_ct.scale},
                   {"frac", net::CtToJson(frac_ct.ct)},
                   {"frac_scale", frac_ct.scale},
                   {"out_scale", out_scale}}});
  ScaledPaillier out{net::PaillierCtFromJson(reply.payload.at("ct")),
                     reply.scale, Taint::Cipher()};
  CheckKey(OwnerPaillier(ctx, owner), out);
  return out;
}

ScaledPaillier UnblindPower(const phe::PaillierPublicKey& pk,
                            const ScaledPaillier& w, const BigInt& blind,
                            int frac_digits) {
  const encoding::CoeffDecomposition u = encoding::DecomposeMantissa(
      encoding::FxEncode(encoding::UnblindFactor(blind), frac_digits),
      frac_digits);
  const ScaledPaillier int_term = encoding::RescaleCt(
      pk, SecureScalarMul(pk, w, u.int_part, 0), frac_digits);
  const ScaledPaillier frac_term =
      SecureScalarMul(pk, w, BigInt(u.frac_part), frac_digits);
  return SecureAdd(pk, int_term, frac_term);
}

ScaledPaillier ConvertRsaToPaillier(DemanderContext& ctx, int owner,
                                    const PowResult& pr, int blind_r) {
  const BigInt blind = encoding::BlindFactor(blind_r);
  const ScaledPaillier w = ConvertRsaToPaillierBlinded(
      ctx, owner, pr, blind, encoding::kProtocolScale);
  return UnblindPower(OwnerPaillier(ctx, owner), w, blind,
                      encoding::kFracDigits);
}

std::vector<ScaledPaillier> SigmoidRound(DemanderContext& ctx, int owner,
                                         std::size_t record,
                                         const ScaledPaillier& den,
                                         const BigInt& blind, int out_scale) {
  const phe::PaillierPublicKey& pk = OwnerPaillier(ctx, owner);
  const ScaledPaillier blinded =
      SecureScalarMul(pk, den, blind, encoding::kBlindScale);
  const std::string nonce = ctx.session->NewNonceId();
  Message reply = ctx.session->Call(
      ctx.id(), PartyId::Owner(owner),
      Message{net::kind::kSigmoidRequest, blinded.scale,
              Taint::Blinded(nonce),
              Json{{"den", net::CtToJson(blinded.ct)},
                   {"den_scale", blinded.scale},
                   {"record", record},
                   {"out_scale", out_scale}}});
  std::vector<ScaledPaillier> out;
  for (const Json& c : reply.payload.at("cts")) {
    ScaledPaillier s{net::PaillierCtFromJson(c), reply.scale, Taint::Cipher()};
    CheckKey(pk, s);
    out.push_back(SecureScalarMul(pk, s, blind, encoding::kBlindScale));
  }
  return out;
}

std::vector<ScaledPaillier> ConvertPaillierKey(
    DemanderContext& ctx, int owner, const phe::PaillierPublicKey& target,
    const std::vector<ScaledPaillier>& cts) {
  if (cts.empty()) return {};
  const phe::PaillierPublicKey& src = OwnerPaillier(ctx, owner);
  const MaskRange range =
      ComputeMaskRange(ctx.directory, ctx.session->n_owners());

  std::string nonce;
  std::vector<BigInt> masks;
  if (ctx.session->faults().reuse_nonce && !ctx.last_mask_id.empty() &&
      ctx.last_mask.size() >= cts.size()) {
    nonce = ctx.last_mask_id;
    masks.assign(ctx.last_mask.begin(), ctx.last_mask.begin() + cts.size());
  } else {
    nonce = ctx.session->NewNonceId();
    for (std::size_t i = 0; i < cts.size(); ++i) {
      masks.push_back(ctx.crypto.UniformRange(range.lo, range.hi));
    }
    ctx.last_mask_id = nonce;
    ctx.last_mask = masks;
  }

  Json payload_cts = Json::array();
  Json scales = Json::array();
  for (std::size_t i = 0; i < cts.size(); ++i) {
    CheckKey(src, cts[i]);
    const phe::PaillierCiphertext masked = phe::PaillierAdd(
        src, cts[i].ct, phe::PaillierEncrypt(src, masks[i], ctx.crypto));
    payload_cts.push_back(net::CtToJson(masked));
    scales.push_back(cts[i].scale);
  }
  Message reply = ctx.session->Call(
      ctx.id(), PartyId::Owner(owner),
      Message{net::kind::kKeySwitchRequest, cts[0].scale,
              Taint::Blinded(nonce),
              Json{{"cts", payload_cts},
                   {"scales", scales},
                   {"target", target.key_id}}});

  const Json& back = reply.payload.at("cts");
  if (back.size() != cts.size()) {
    throw Error(ErrorCode::kProtocolAbort, "key switch lost ciphertexts");
  }
  std::vector<ScaledPaillier> out;
  for (std::size_t i = 0; i < cts.size(); ++i) {
    ScaledPaillier c{net::PaillierCtFromJson(back[i]), cts[i].scale,
                     Taint::Cipher()};
    CheckKey(target, c);
    c.ct = phe::PaillierSub(target, c.ct,
                            phe::PaillierEncryptWithNonce(target, masks[i], 1));
    out.push_back(c);
  }
  return out;
}

bool SecureSign(DemanderContext& ctx, int owner, const ScaledPaillier& c) {
  const phe::PaillierPublicKey& pk = OwnerPaillier(ctx, owner);
  CheckKey(pk, c);
  phe::PaillierCiphertext sent = c.ct;
  Taint taint = Taint::Cipher();
  if (!ctx.session->faults().skip_sign_blinding) {
    const BigInt rho = 1 + ctx.crypto.UniformBelow(kRhoMax);
    sent = phe::PaillierScalarPow(pk, c.ct, rho);
    taint = Taint::Blinded(ctx.session->NewNonceId());
  }
  Message reply = ctx.session->Call(
      ctx.id(), PartyId::Owner(owner),
      Message{net::kind::kSignRequest, c.scale, taint,
              Json{{"ct", net::CtToJson(sent)}}});
  if (reply.kind != net::kind::kSignBit || !reply.payload.is_string() ||
      (reply.payload != "0" && reply.payload != "1")) {
    throw Error(ErrorCode::kProtocolAbort, "malformed sign reply");
  }
  return reply.payload == "1";
}

std::vector<BigInt> SecureSum(DemanderContext& ctx,
                              const std::string& family) {
  net::Session& s = *ctx.session;
  const std::vector<PartyId> owners = s.Owners();
  std::vector<Message> requests(
      owners.size(), Message{net::kind::kSumRequest, 0, Taint::Public(),
                             Json{{"family", family}}});
  std::vector<Message> shares = s.CallAll(ctx.id(), owners, requests);

  std::vector<BigInt> total;
  std::vector<std::vector<phe::PaillierCiphertext>> noise;
  for (const Message& share : shares) {
    std::vector<BigInt> masked = net::IntsFromJson(share.payload.at("masked"));
    noise.push_back(net::PaillierCtsFromJson(share.payload.at("noise")));
    if (total.empty()) total.assign(masked.size(), BigInt(0));
    if (masked.size() != total.size() || noise.back().size() != total.size()) {
      throw Error(ErrorCode::kProtocolAbort, "summation shapes disagree");
    }
    for (std::size_t j = 0; j < masked.size(); ++j) {
      s.NoteReceived(ctx.id(), masked[j]);
      total[j] += masked[j];
    }
  }
  if (total.empty()) return {};

  // Encrypt the noisy total under owner 1, then peel off each owner's noise
  // and hand the ciphertexts on to the next key, ending at the demander.
  const int n = s.n_owners();
  std::vector<ScaledPaillier> cts;
  for (const BigInt& t : total) {
    cts.push_back(EncryptConstant(OwnerPaillier(ctx, 1), t, 0, ctx.crypto));
  }
  for (int i = 1; i <= n; ++i) {
    const phe::PaillierPublicKey& pk = OwnerPaillier(ctx, i);
    for (std::size_t j = 0; j < cts.size(); ++j) {
      cts[j].ct = phe::PaillierSub(pk, cts[j].ct, noise[i - 1][j]);
    }
    const phe::PaillierPublicKey& next =
        i < n ? OwnerPaillier(ctx, i + 1) : ctx.keys.pub;
    cts = ConvertPaillierKey(ctx, i, next, cts);
  }
  std::vector<BigInt> out;
  for (const ScaledPaillier& c : cts) out.push_back(ctx.Decrypt(c));
  return out;
}

}  // namespace pheml::blocks
