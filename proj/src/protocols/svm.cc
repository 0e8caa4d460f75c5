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
#include "pheml/protocols/train.h"

namespace pheml::protocols {
namespace {

using blocks::ScaledPaillier;
using encoding::kProtocolScale;

// [y]_P and [x^ y]_P for every record, as uploaded by the owners.
struct SvmUpload {
  std::vector<ScaledPaillier> y;
  std::vector<std::vector<ScaledPaillier>> xy;
};

std::vector<SvmUpload> UploadSvm(Deployment& dep) {
  std::vector<SvmUpload> out;
  for (int i = 1; i <= dep.n_owners(); ++i) {
    blocks::Owner& o = dep.owner(i);
    const phe::PaillierPublicKey& pk = o.paillier().pub;
    const data::Dataset& shard = dep.shard(i);
    net::Json ys = net::Json::array();
    net::Json xys = net::Json::array();
    for (std::size_t r = 0; r < shard.size(); ++r) {
      const BigInt y = shard.labels[r] == 1 ? 1 : -1;
      ys.push_back(net::CtToJson(
          phe::PaillierEncrypt(pk, encoding::ToResidue(y, pk.n), o.rng())));
      net::Json row = net::Json::array();
      for (const BigInt& x : QuantizeRecord(shard.x[r])) {
        row.push_back(net::CtToJson(phe::PaillierEncrypt(
            pk, encoding::ToResidue(x * y, pk.n), o.rng())));
      }
      xys.push_back(row);
    }
    net::Message got = dep.session().Push(
        o.id(), net::PartyId::Demander(),
        net::Message{net::kind::kUploadSvm, kProtocolScale, Taint::Cipher(),
                     net::Json{{"y", ys}, {"xy", xys}}});
    SvmUpload up;
    for (const net::Json& c : got.payload["y"]) {
      up.y.push_back({net::PaillierCtFromJson(c), 0, Taint::Cipher()});
    }
    for (const net::Json& row : got.payload["xy"]) {
      std::vector<ScaledPaillier> cts;
      for (const net::Json& c : row) {
        cts.push_back(
            {net::PaillierCtFromJson(c), kProtocolScale, Taint::Cipher()});
        phe::ValidatePaillierCiphertext(pk, cts.back().ct);
      }
      up.xy.push_back(std::move(cts));
    }
    out.push_back(std::move(up));
  }
  return out;
}

}  // namespace

LinearTrainResult SvmTrain(Deployment& dep, const TrainConfig& cfg) {
  cfg.Validate();
  blocks::DemanderContext& ctx = dep.demander();
  const std::vector<SvmUpload> uploads = UploadSvm(dep);
  const std::size_t dim = dep.shard(1).dim() + 1;

  const BigInt one4 = Pow10(4);
  const BigInt lam = encoding::FxEncode(cfg.lambda, kProtocolScale);
  const BigInt keep = one4 - lam * encoding::FxEncode(cfg.alpha, kProtocolScale);
  const std::vector<std::size_t> schedule =
      SampleSchedule(cfg.seed, cfg.max_iters, dep.total_records());

  LinearTrainResult res;
  res.model.theta = cfg.InitialTheta(dim);
  for (int it = 0; it < cfg.max_iters; ++it) {
    const auto [owner, local] = dep.Locate(schedule[it]);
    const phe::PaillierPublicKey& pk = ctx.directory.Owner(owner).paillier;
    const std::vector<ScaledPaillier>& xy = uploads[owner - 1].xy[local];
    std::vector<BigInt>& theta = res.model.theta;

    // u = y theta^T x^ at scale 4; the margin is violated iff 1 - u > 0.
    const ScaledPaillier u = blocks::SecureDot(pk, xy, theta, kProtocolScale);
    const ScaledPaillier margin = blocks::SecureSub(
        pk, blocks::EncryptConstant(pk, one4, 4, ctx.crypto), u);
    if (blocks::SecureSign(ctx, owner, margin)) {
      std::vector<ScaledPaillier> next;
      for (std::size_t j = 0; j < dim; ++j) {
        next.push_back(blocks::SecureAdd(
            pk, blocks::EncryptConstant(pk, keep * theta[j], 6, ctx.crypto),
            blocks::SecureScalarMul(pk, xy[j], lam * 100, 4)));
      }
      const std::vector<ScaledPaillier> mine =
          blocks::ConvertPaillierKey(ctx, owner, ctx.keys.pub, next);
      for (std::size_t j = 0; j < dim; ++j) {
        theta[j] = encoding::Truncate(ctx.Decrypt(mine[j]), 6, kProtocolScale);
      }
    } else {
      for (std::size_t j = 0; j < dim; ++j) {
        theta[j] = encoding::Truncate(keep * theta[j], 6, kProtocolScale);
      }
    }
    res.model.iteration = it + 1;
    res.trace.push_back(theta);
  }
  return res;
}

}  // namespace pheml::protocols
