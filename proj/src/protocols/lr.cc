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
#include <cmath>

#include "pheml/blocks/interactive.h"
#include "pheml/common/error.h"
#include "pheml/net/audit.h"
#include "pheml/protocols/train.h"

namespace pheml::protocols {
namespace {

using blocks::ScaledPaillier;
using encoding::kProtocolScale;

// [x^_j y]_P per record.
std::vector<std::vector<std::vector<ScaledPaillier>>> UploadLr(
    Deployment& dep) {
  std::vector<std::vector<std::vector<ScaledPaillier>>> out;
  for (int i = 1; i <= dep.n_owners(); ++i) {
    blocks::Owner& o = dep.owner(i);
    const phe::PaillierPublicKey& pk = o.paillier().pub;
    const data::Dataset& shard = dep.shard(i);
    std::vector<std::vector<BigInt>> records;
    net::Json xys = net::Json::array();
    for (std::size_t r = 0; r < shard.size(); ++r) {
      records.push_back(QuantizeRecord(shard.x[r]));
      net::Json row = net::Json::array();
      for (const BigInt& x : records.back()) {
        row.push_back(net::CtToJson(
            phe::PaillierEncrypt(pk, x * shard.labels[r], o.rng())));
      }
      xys.push_back(row);
    }
    o.SetRecords(std::move(records));
    net::Message got = dep.session().Push(
        o.id(), net::PartyId::Demander(),
        net::Message{net::kind::kUploadLr, kProtocolScale, Taint::Cipher(),
                     net::Json{{"xy", xys}}});
    std::vector<std::vector<ScaledPaillier>> rows;
    for (const net::Json& row : got.payload["xy"]) {
      std::vector<ScaledPaillier> cts;
      for (const net::Json& c : row) {
        cts.push_back(
            {net::PaillierCtFromJson(c), kProtocolScale, Taint::Cipher()});
        phe::ValidatePaillierCiphertext(pk, cts.back().ct);
      }
      rows.push_back(std::move(cts));
    }
    out.push_back(std::move(rows));
  }
  return out;
}

double L1Norm(const std::vector<BigInt>& theta) {
  double s = 0;
  for (const BigInt& t : theta) s += std::fabs(encoding::FxDecode(t, kProtocolScale));
  return s;
}

}  // namespace

void CheckLrBudget(int d, const TrainConfig& cfg) {
  encoding::RequireBudget(
      encoding::BudgetCheckLr(d, cfg.theta_l1_bound, cfg.key_bits),
      "LR configuration (d=" + std::to_string(d) + ", sum|theta| <= " +
          std::to_string(cfg.theta_l1_bound) + ", " +
          std::to_string(cfg.key_bits) +
          "-bit keys) needs log10 N > (sum|theta| + d - 1) * 2 and");
}

LinearTrainResult LrTrain(Deployment& dep, const TrainConfig& cfg) {
  cfg.Validate();
  const std::size_t dim = dep.shard(1).dim() + 1;
  CheckLrBudget(static_cast<int>(dim), cfg);
  blocks::DemanderContext& ctx = dep.demander();
  const auto uploads = UploadLr(dep);

  const BigInt lam = encoding::FxEncode(cfg.lambda, kProtocolScale);
  const BigInt one_exp = Pow10(kLrExpScale);
  const int update_scale = kLrExpScale + kProtocolScale;
  const BigInt xy_shift = Pow10(update_scale - 2 * kProtocolScale);
  const std::vector<std::size_t> schedule =
      SampleSchedule(cfg.seed, cfg.max_iters, dep.total_records());

  LinearTrainResult res;
  res.model.theta = cfg.InitialTheta(dim);
  for (int it = 0; it < cfg.max_iters; ++it) {
    std::vector<BigInt>& theta = res.model.theta;
    if (L1Norm(theta) > cfg.theta_l1_bound) {
      dep.session().Abort("theta left the admitted budget");
      throw Error(ErrorCode::kBudgetExceeded,
                  "sum |theta| = " + std::to_string(L1Norm(theta)) +
                      " exceeds the configured bound " +
                      std::to_string(cfg.theta_l1_bound));
    }
    const auto [owner, local] = dep.Locate(schedule[it]);
    const phe::PaillierPublicKey& pk = ctx.directory.Owner(owner).paillier;
    const phe::CloudRsaPublicKey& rsa_pk = ctx.directory.Owner(owner).rsa->pub;

    // e^{-theta^T x} under the owner's Cloud-RSA key, then under its
    // Paillier key at scale kLrExpScale.
    const blocks::ExpEncodedVector ev =
        blocks::FetchExpVector(ctx, owner, local);
    const blocks::PowResult pr = blocks::SecurePow(rsa_pk, ev, theta);
    const BigInt b1 =
        encoding::BlindFactor(blocks::DrawBlindExponent(ctx.exp_blind));
    const ScaledPaillier w =
        blocks::ConvertRsaToPaillierBlinded(ctx, owner, pr, b1, kLrReplyScale);
    const ScaledPaillier e =
        blocks::UnblindPower(pk, w, b1, kLrUnblindDigits);
    const ScaledPaillier den = blocks::SecureAdd(
        pk, e, blocks::EncryptConstant(pk, one_exp, kLrExpScale, ctx.crypto));

    // x_j / (1 + e^{-theta^T x}) at scale kLrExpScale.
    const BigInt b2 =
        encoding::BlindFactor(blocks::DrawBlindExponent(ctx.exp_blind));
    const std::vector<ScaledPaillier> g =
        blocks::SigmoidRound(ctx, owner, local, den, b2, kLrSigmoidScale);

    // theta_j - lambda (sigma x_j - x_j y) at scale update_scale.
    const std::vector<ScaledPaillier>& xy = uploads[owner - 1][local];
    std::vector<ScaledPaillier> next;
    for (std::size_t j = 0; j < dim; ++j) {
      ScaledPaillier t = blocks::EncryptConstant(
          pk, theta[j] * one_exp, update_scale, ctx.crypto);
      t = blocks::SecureSub(pk, t,
                            blocks::SecureScalarMul(pk, g[j], lam,
                                                    kProtocolScale));
      t = blocks::SecureAdd(
          pk, t,
          blocks::SecureScalarMul(pk, xy[j], lam * xy_shift,
                                  update_scale - kProtocolScale));
      next.push_back(t);
    }
    const std::vector<ScaledPaillier> mine =
        blocks::ConvertPaillierKey(ctx, owner, ctx.keys.pub, next);
    for (std::size_t j = 0; j < dim; ++j) {
      theta[j] =
          encoding::Truncate(ctx.Decrypt(mine[j]), update_scale, kProtocolScale);
    }
    res.model.iteration = it + 1;
    res.trace.push_back(theta);
  }
  return res;
}

}  // namespace pheml::protocols
