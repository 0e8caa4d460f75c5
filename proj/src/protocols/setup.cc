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
#include "pheml/protocols/setup.h"

#include <cmath>
#include <numbers>

#include "pheml/blocks/local_ops.h"
#include "pheml/common/error.h"
#include "pheml/net/audit.h"
#include "pheml/protocols/config.h"

namespace pheml::protocols {
namespace {

// Extra decimal digits kept free above the worst-case power product.
constexpr double kRsaDigitMargin = 8;

}  // namespace

void TrainConfig::Validate() const {
  if (!(lambda > 0)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must be > 0");
  }
  if (!(alpha >= 0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be >= 0");
  }
  if (max_iters < 1) {
    throw Error(ErrorCode::kInvalidArgument, "iterations must be >= 1");
  }
  if (batch != 1) {
    throw Error(ErrorCode::kInvalidArgument, "only batch size 1 is supported");
  }
  if (key_bits != 512 && key_bits != 1024 && key_bits != 2048 &&
      key_bits != 4096) {
    throw Error(ErrorCode::kInvalidArgument,
                "key bits must be 512, 1024, 2048 or 4096");
  }
  if (!(theta_l1_bound >= 0)) {
    throw Error(ErrorCode::kInvalidArgument, "theta bound must be >= 0");
  }
}

std::vector<BigInt> TrainConfig::InitialTheta(std::size_t dim) const {
  if (initial_theta.empty()) return std::vector<BigInt>(dim, BigInt(0));
  if (initial_theta.size() != dim) {
    throw Error(ErrorCode::kInvalidArgument,
                "initial theta has " + std::to_string(initial_theta.size()) +
                    " entries, model has " + std::to_string(dim));
  }
  return initial_theta;
}

std::vector<BigInt> QuantizeRecord(const std::vector<double>& x) {
  std::vector<BigInt> out;
  out.reserve(x.size() + 1);
  for (double v : x) out.push_back(encoding::FxEncode(v, encoding::kProtocolScale));
  out.push_back(Pow10(encoding::kProtocolScale));
  return out;
}

std::vector<std::size_t> SampleSchedule(std::uint64_t seed, int iters,
                                        std::size_t m) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "no training records");
  Rng rng = Stream(seed, kStreamSampling);
  std::vector<std::size_t> out;
  out.reserve(iters);
  for (int i = 0; i < iters; ++i) {
    out.push_back(static_cast<std::size_t>(
        rng.UniformInt(0, static_cast<std::int64_t>(m) - 1)));
  }
  return out;
}

int RsaBitsFor(int d, double theta_l1_bound, int key_bits) {
  const double digits = blocks::PowDigitsBound(d, theta_l1_bound) +
                        kRsaDigitMargin;
  int bits = static_cast<int>(std::ceil(digits / std::log10(2.0)));
  bits = ((bits + 511) / 512) * 512;
  return std::max(bits, key_bits);
}

Deployment::Deployment(std::vector<data::Dataset> shards,
                       const SetupOptions& opts)
    : shards_(std::move(shards)) {
  const int n = static_cast<int>(shards_.size());
  for (const data::Dataset& s : shards_) total_ += s.size();
  session_ = std::make_unique<net::Session>(n, opts.latency_ms, opts.seed);
  session_->faults() = opts.faults;

  Rng demander_keys = Stream(opts.seed, "keys/demander");
  demander_.session = session_.get();
  demander_.keys = phe::PaillierKeygen(opts.key_bits, demander_keys);
  demander_.crypto = Stream(opts.seed, kStreamCrypto);
  demander_.exp_blind = Stream(opts.seed, kStreamExpBlind);
  session_->RegisterKey(demander_.keys.pub.key_id, net::PartyId::Demander());

  blocks::Directory dir;
  dir.demander = demander_.keys.pub;
  for (int i = 1; i <= n; ++i) {
    const std::string name = "owner-" + std::to_string(i);
    Rng key_rng = Stream(opts.seed, "keys/" + name);
    phe::PaillierKeyPair paillier = phe::PaillierKeygen(opts.key_bits, key_rng);
    std::optional<phe::CloudRsaKeyMaterial> rsa;
    if (opts.rsa_bits > 0) rsa = phe::CloudRsaKeygen(opts.rsa_bits, key_rng);
    owners_.push_back(std::make_unique<blocks::Owner>(
        i, *session_, std::move(paillier), std::move(rsa),
        Stream(opts.seed, "party/" + name)));

    // Each owner announces its public keys, including the Cloud-RSA
    // encryption exponent, to the demander.
    blocks::Owner& o = *owners_.back();
    net::Json announce{{"paillier", ToHex(o.paillier().pub.n)}};
    if (o.rsa()) {
      announce["cloudrsa"] = ToHex(o.rsa()->n);
      announce["e"] = ToHex(o.rsa()->enc_exp);
    }
    net::Message got = session_->Push(
        o.id(), net::PartyId::Demander(),
        net::Message{net::kind::kKeyAnnounce, 0, Taint::Public(), announce});
    blocks::OwnerPublic pub{
        phe::MakePaillierPublicKey(net::IntFromJson(got.payload["paillier"])),
        std::nullopt};
    if (got.payload.contains("cloudrsa")) {
      pub.rsa = phe::CloudRsaEncryptionKey{
          phe::MakeCloudRsaPublicKey(net::IntFromJson(got.payload["cloudrsa"])),
          net::IntFromJson(got.payload["e"])};
    }
    dir.owners[i] = pub;
  }

  // The demander distributes the Paillier public keys of all parties.
  net::Json keys{{"demander", ToHex(dir.demander.n)}};
  net::Json owners = net::Json::array();
  for (const auto& [_, o] : dir.owners) owners.push_back(ToHex(o.paillier.n));
  keys["owners"] = owners;
  for (auto& o : owners_) {
    net::Message got = session_->Push(
        net::PartyId::Demander(), o->id(),
        net::Message{net::kind::kKeyAnnounce, 0, Taint::Public(), keys});
    blocks::Directory view;
    view.demander =
        phe::MakePaillierPublicKey(net::IntFromJson(got.payload["demander"]));
    int idx = 1;
    for (const net::Json& h : got.payload["owners"]) {
      view.owners[idx++] = blocks::OwnerPublic{
          phe::MakePaillierPublicKey(net::IntFromJson(h)), std::nullopt};
    }
    o->SetDirectory(std::move(view));
  }
  demander_.directory = std::move(dir);
}

data::Dataset Deployment::Pooled() const {
  data::Dataset out;
  for (const data::Dataset& s : shards_) out.Append(s);
  return out;
}

std::pair<int, std::size_t> Deployment::Locate(std::size_t global) const {
  std::size_t rest = global;
  for (std::size_t i = 0; i < shards_.size(); ++i) {
    if (rest < shards_[i].size()) return {static_cast<int>(i) + 1, rest};
    rest -= shards_[i].size();
  }
  throw Error(ErrorCode::kInvalidArgument, "record index out of range");
}

}  // namespace pheml::protocols
