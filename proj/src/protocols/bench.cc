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
#include "pheml/protocols/bench.h"

#include <chrono>
#include <functional>
#include <sstream>

#include "pheml/blocks/interactive.h"
#include "pheml/common/error.h"
#include "pheml/protocols/config.h"
#include "pheml/protocols/setup.h"

namespace pheml::protocols {
namespace {

using blocks::ScaledPaillier;
using blocks::ScaledRsa;
using encoding::kProtocolScale;

// Model coefficients small enough that every power product fits a Cloud-RSA
// modulus of the Paillier size.
constexpr double kBenchThetaL1 = 1.0;

std::vector<BigInt> RandomMantissas(Rng& rng, int lo, int hi) {
  std::vector<BigInt> out;
  for (int j = 0; j < kBenchDim; ++j) out.push_back(rng.UniformInt(lo, hi));
  return out;
}

}  // namespace

std::vector<BlockBench> BenchBlocks(int key_bits, int trials,
                                    std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  SetupOptions opts;
  opts.key_bits = key_bits;
  opts.rsa_bits = RsaBitsFor(kBenchDim, kBenchThetaL1, key_bits);
  opts.seed = seed;
  data::Dataset shard;
  shard.x.assign(1, std::vector<double>(kBenchDim - 1, 0.5));
  shard.category.assign(1, std::vector<int>(kBenchDim - 1, -1));
  shard.labels.assign(1, 1);
  std::vector<data::Dataset> shards{shard};
  Deployment dep(std::move(shards), opts);
  blocks::DemanderContext& ctx = dep.demander();
  net::Session& session = dep.session();
  const phe::PaillierPublicKey& pk = ctx.directory.Owner(1).paillier;
  const phe::CloudRsaEncryptionKey& ek = *ctx.directory.Owner(1).rsa;
  Rng rng = Stream(seed, "bench");

  std::vector<std::vector<BigInt>> records;
  records.push_back(RandomMantissas(rng, 0, 100));
  dep.owner(1).SetRecords(records);

  auto enc_vec = [&](const std::vector<BigInt>& v) {
    std::vector<ScaledPaillier> out;
    for (const BigInt& m : v) {
      out.push_back(blocks::EncryptConstant(pk, m, kProtocolScale, ctx.crypto));
    }
    return out;
  };

  struct Case {
    std::string name;
    std::function<void()> body;
  };
  std::vector<Case> cases;
  const std::vector<ScaledPaillier> a = enc_vec(RandomMantissas(rng, -500, 500));
  const std::vector<ScaledPaillier> b = enc_vec(RandomMantissas(rng, -500, 500));
  const std::vector<BigInt> w = RandomMantissas(rng, -20, 20);
  std::vector<ScaledRsa> ra;
  std::vector<ScaledRsa> rb;
  for (int j = 0; j < kBenchDim; ++j) {
    ra.push_back({phe::CloudRsaEncrypt(ek, BigInt(rng.UniformInt(1, 1000))),
                  kProtocolScale, Taint::Cipher()});
    rb.push_back({phe::CloudRsaEncrypt(ek, BigInt(rng.UniformInt(1, 1000))),
                  kProtocolScale, Taint::Cipher()});
  }
  cases.push_back({"add", [&] {
                     for (int j = 0; j < kBenchDim; ++j) {
                       blocks::SecureAdd(pk, a[j], b[j]);
                     }
                   }});
  cases.push_back({"sub", [&] {
                     for (int j = 0; j < kBenchDim; ++j) {
                       blocks::SecureSub(pk, a[j], b[j]);
                     }
                   }});
  cases.push_back({"pcmul", [&] {
                     for (int j = 0; j < kBenchDim; ++j) {
                       blocks::SecureScalarMul(pk, a[j], w[j], kProtocolScale);
                     }
                   }});
  cases.push_back(
      {"dot", [&] { blocks::SecureDot(pk, a, w, kProtocolScale); }});
  cases.push_back({"ccmul", [&] {
                     for (int j = 0; j < kBenchDim; ++j) {
                       blocks::SecureCtMul(ek.pub, ra[j], rb[j]);
                     }
                   }});
  blocks::PowResult pr;
  cases.push_back({"pow", [&] {
                     pr = blocks::SecurePow(
                         ek.pub, blocks::FetchExpVector(ctx, 1, 0), w);
                   }});
  cases.push_back({"conv7", [&] {
                     blocks::ConvertRsaToPaillier(
                         ctx, 1, pr, blocks::DrawBlindExponent(ctx.exp_blind));
                   }});
  cases.push_back({"conv8", [&] {
                     blocks::ConvertPaillierKey(ctx, 1, ctx.keys.pub, {a[0]});
                   }});

  std::vector<BlockBench> rows;
  for (const Case& c : cases) {
    BlockBench row;
    row.block = c.name;
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t i0 = session.interactions();
      const std::uint64_t b0 = session.bytes();
      const double o0 = session.owner_wall_ms();
      const auto t0 = std::chrono::steady_clock::now();
      c.body();
      const double total = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
      const double owner = session.owner_wall_ms() - o0;
      row.total_ms += total;
      row.owner_ms += owner;
      row.demander_ms += total - owner;
      row.interactions = session.interactions() - i0;
      row.bytes = session.bytes() - b0;
    }
    row.total_ms /= trials;
    row.owner_ms /= trials;
    row.demander_ms /= trials;
    rows.push_back(row);
  }
  session.Close();
  return rows;
}

std::string BenchCsv(const std::vector<BlockBench>& rows) {
  std::ostringstream out;
  out << "block,owner_ms,demander_ms,total_ms,interactions,bytes\n";
  out.setf(std::ios::fixed);
  out.precision(3);
  for (const BlockBench& r : rows) {
    out << r.block << ',' << r.owner_ms << ',' << r.demander_ms << ','
        << r.total_ms << ',' << r.interactions << ',' << r.bytes << '\n';
  }
  return out.str();
}

}  // namespace pheml::protocols
