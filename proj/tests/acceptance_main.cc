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
// Acceptance harness: one [PASS]/[FAIL] line per criterion, exit status 1
// if any criterion fails.
//
// PHEML_ACCEPTANCE_PROFILE=full switches the BCWD accuracy runs to 2048-bit
// keys, 1000 iterations and the 0.94 threshold (hours of runtime).

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pheml/blocks/interactive.h"
#include "pheml/common/error.h"
#include "pheml/net/audit.h"
#include "pheml/oracle/plain.h"
#include "pheml/phe/cloud_rsa.h"
#include "pheml/phe/paillier.h"
#include "pheml/protocols/run.h"
#include "pheml/protocols/train.h"
#include "test_util.h"

namespace pheml {
namespace {

using blocks::ScaledPaillier;
using blocks::ScaledRsa;
using encoding::kProtocolScale;
using protocols::Deployment;
using protocols::Protocol;
using protocols::RunSpec;
using protocols::SetupOptions;
using protocols::TrainConfig;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Profile {
  std::string name;
  int key_bits;
  int iters;
  double threshold;
};

Profile ActiveProfile() {
  const char* env = std::getenv("PHEML_ACCEPTANCE_PROFILE");
  if (env != nullptr && std::string(env) == "full") {
    return {"full", 2048, 1000, 0.94};
  }
  return {"ci", 1024, 200, 0.92};
}

// Audit reports of every protocol run made by the harness.
std::vector<std::pair<std::string, net::AuditReport>>& Audits() {
  static std::vector<std::pair<std::string, net::AuditReport>> audits;
  return audits;
}

void Record(const std::string& what, const net::Transcript& t) {
  Audits().emplace_back(what, net::AuditTranscript(t));
}

double Seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string Fmt(double v, int digits = 4) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

RunSpec BcwdSpec(Protocol p, int key_bits, int iters, std::uint64_t seed) {
  RunSpec spec;
  spec.protocol = p;
  spec.dataset = testing::DataPath("bcwd.csv");
  spec.schema = testing::DataPath("bcwd.schema.json");
  spec.owners = 5;
  spec.key_bits = key_bits;
  spec.iters = iters;
  spec.seed = seed;
  spec.latency_ms = 0;
  return spec;
}

// ---------------------------------------------------------------------------

Outcome Ac1Homomorphisms() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(2024);
  const phe::PaillierKeyPair kp = phe::PaillierKeygen(512, rng);
  const phe::CloudRsaKeyMaterial rsa = phe::CloudRsaKeygen(512, rng);
  const phe::CloudRsaEncryptionKey ek = rsa.EncryptionKey();
  int paillier_fail = 0;
  int rsa_fail = 0;
  for (int i = 0; i < 1000; ++i) {
    const BigInt a = rng.UniformBelow(kp.pub.n);
    const BigInt b = rng.UniformBelow(kp.pub.n);
    const phe::PaillierCiphertext c = phe::PaillierAdd(
        kp.pub, phe::PaillierEncrypt(kp.pub, a, rng),
        phe::PaillierEncrypt(kp.pub, b, rng));
    paillier_fail += phe::PaillierDecrypt(kp.priv, c) != Mod(a + b, kp.pub.n);

    const BigInt x = rng.UniformUnit(rsa.n);
    const BigInt y = rng.UniformUnit(rsa.n);
    const phe::CloudRsaCiphertext d = phe::CloudRsaMul(
        rsa.Public(), phe::CloudRsaEncrypt(ek, x), phe::CloudRsaEncrypt(ek, y));
    rsa_fail += phe::CloudRsaDecrypt(rsa, d) != Mod(x * y, rsa.n);
  }
  const double secs = Seconds(t0);
  return {paillier_fail == 0 && rsa_fail == 0 && secs < 60,
          "paillier failures " + std::to_string(paillier_fail) +
              ", cloud-rsa failures " + std::to_string(rsa_fail) + ", " +
              Fmt(secs, 1) + "s"};
}

Outcome Ac2WorkedExample() {
  SetupOptions opts;
  opts.key_bits = 512;
  opts.rsa_bits = 1024;
  opts.seed = 7;
  Deployment dep({testing::Synthetic(1, 2, 1)}, opts);
  dep.owner(1).SetRecords({{10, 20}});
  blocks::DemanderContext& ctx = dep.demander();
  const phe::CloudRsaKeyMaterial& rsa = *dep.owner(1).rsa();
  const phe::PaillierKeyPair& pail = dep.owner(1).paillier();
  auto dec_rsa = [&](const ScaledRsa& c) {
    return phe::CloudRsaDecrypt(rsa, c.ct);
  };
  auto dec_p = [&](const ScaledPaillier& c) {
    return encoding::FromResidue(phe::PaillierDecrypt(pail.priv, c.ct),
                                 pail.pub.n);
  };

  std::vector<std::string> bad;
  auto expect = [&](const std::string& what, const BigInt& got,
                    const BigInt& want) {
    if (got != want) {
      bad.push_back(what + "=" + got.get_str() + " (want " + want.get_str() +
                    ")");
    }
  };

  // theta = (1.31, 2.42) against the positive bases e^{+x}: the power block
  // computes e^{-theta^T x}, so the coefficients enter negated.
  const blocks::ExpEncodedVector ev = blocks::FetchExpVector(ctx, 1, 0);
  expect("base1", dec_rsa(ev.pos[0]), 110);
  expect("base2", dec_rsa(ev.pos[1]), 122);
  expect("122^2", phe::CloudRsaDecrypt(
                      rsa, phe::CloudRsaPow(rsa.Public(), ev.pos[1].ct, 2)),
         14884);
  const blocks::PowResult pr =
      blocks::SecurePow(rsa.Public(), ev, {-131, -242});
  expect("int", dec_rsa(pr.int_ct), 1637240);
  expect("int_scale", pr.int_ct.scale, 6);
  expect("frac_scale", pr.frac_ct.scale, 146);

  const BigInt blind = encoding::BlindFactor(-2);
  expect("blind", blind, 1353);
  const ScaledRsa b{phe::CloudRsaEncrypt(ctx.directory.Owner(1).rsa.value(),
                                         blind),
                    encoding::kBlindScale, Taint::Cipher()};
  const ScaledRsa blinded = blocks::SecureCtMul(rsa.Public(), pr.int_ct, b);
  expect("blinded", dec_rsa(blinded), 2215185720);
  expect("blinded_scale", blinded.scale, 10);
  const ScaledRsa frac_blinded =
      blocks::SecureCtMul(rsa.Public(), pr.frac_ct, b);
  expect("frac_blinded_scale", frac_blinded.scale, 150);

  const encoding::CoeffDecomposition u = encoding::DecomposeMantissa(
      encoding::FxEncode(encoding::UnblindFactor(blind), 2), 2);
  expect("unblind_int", u.int_part, 7);
  expect("unblind_frac", u.frac_part, 54);

  const ScaledPaillier w = blocks::ConvertRsaToPaillierBlinded(
      ctx, 1, pr, blind, kProtocolScale);
  // The worked example reports 22 here; the exact products give 0.2431.
  expect("owner_reply", dec_p(w), 24);
  Rng rng(1);
  const ScaledPaillier ex = blocks::UnblindPower(
      pail.pub, blocks::EncryptConstant(pail.pub, 22, 2, rng), blind, 2);
  expect("unblinded_22", dec_p(ex), 16588);
  Record("AC2 worked example", dep.session().transcript());
  return {bad.empty(),
          bad.empty() ? "110 122 14884 1637240 2215185720 @10, frac @150, "
                        "(7,54), 22 -> 1.6588; owner reply 24 (exact products)"
                      : "mismatch: " + [&] {
                          std::string s;
                          for (const auto& x : bad) s += x + " ";
                          return s;
                        }()};
}

Outcome Ac3BlockOracle() {
  constexpr int kTrials = 500;
  constexpr int kDim = 4;
  SetupOptions opts;
  opts.key_bits = 512;
  opts.rsa_bits = protocols::RsaBitsFor(kDim, 1.0, 512);
  opts.seed = 33;
  Deployment dep({testing::Synthetic(1, 2, 2), testing::Synthetic(1, 2, 3)},
                 opts);
  blocks::DemanderContext& ctx = dep.demander();
  const phe::PaillierKeyPair& kp = dep.owner(1).paillier();
  const phe::PaillierPublicKey& pk = kp.pub;
  const phe::CloudRsaKeyMaterial& rsa = *dep.owner(1).rsa();
  const phe::CloudRsaEncryptionKey ek = rsa.EncryptionKey();
  Rng rng(34);
  auto rnd = [&](std::int64_t lim) { return BigInt(rng.UniformInt(-lim, lim)); };
  auto enc = [&](const BigInt& m, int scale) {
    return blocks::EncryptConstant(pk, m, scale, rng);
  };
  auto dec = [&](const ScaledPaillier& c) {
    return encoding::FromResidue(phe::PaillierDecrypt(kp.priv, c.ct), pk.n);
  };

  std::vector<std::vector<BigInt>> records;
  for (int i = 0; i < kTrials; ++i) {
    std::vector<BigInt> x;
    for (int j = 0; j < kDim; ++j) x.push_back(rng.UniformInt(0, 100));
    records.push_back(x);
  }
  dep.owner(1).SetRecords(records);

  std::map<std::string, int> failures;
  for (const char* b : {"add", "sub", "pcmul", "dot", "ccmul", "pow", "conv7",
                        "sigmoid", "conv8", "sign"}) {
    failures[b] = 0;
  }
  std::vector<ScaledPaillier> switch_batch;
  std::vector<BigInt> switch_expect;
  for (int i = 0; i < kTrials; ++i) {
    const BigInt a = rnd(1000000);
    const BigInt b = rnd(1000000);
    const ScaledPaillier ca = enc(a, 2);
    const ScaledPaillier cb = enc(b, 2);
    failures["add"] += dec(blocks::SecureAdd(pk, ca, cb)) != a + b;
    failures["sub"] += dec(blocks::SecureSub(pk, ca, cb)) != a - b;
    const BigInt k = rnd(10000);
    failures["pcmul"] += dec(blocks::SecureScalarMul(pk, ca, k, 2)) != a * k;

    std::vector<ScaledPaillier> xs;
    std::vector<BigInt> w;
    BigInt dot = 0;
    for (int j = 0; j < kDim; ++j) {
      const BigInt x = rnd(100000);
      w.push_back(rnd(10000));
      xs.push_back(enc(x, 2));
      dot += x * w.back();
    }
    failures["dot"] += dec(blocks::SecureDot(pk, xs, w, 2)) != dot;

    const BigInt u = rng.UniformInt(1, 1000000000);
    const BigInt v = rng.UniformInt(1, 1000000000);
    const ScaledRsa ru{phe::CloudRsaEncrypt(ek, u), 2, Taint::Cipher()};
    const ScaledRsa rv{phe::CloudRsaEncrypt(ek, v), 4, Taint::Cipher()};
    failures["ccmul"] +=
        phe::CloudRsaDecrypt(rsa, blocks::SecureCtMul(rsa.Public(), ru, rv).ct) !=
        u * v;

    // Coefficients with sum |theta_j| <= 1.
    std::vector<BigInt> theta;
    for (int j = 0; j < kDim; ++j) theta.push_back(rnd(25));
    const blocks::PowResult pr = blocks::SecurePow(
        rsa.Public(), blocks::FetchExpVector(ctx, 1, i), theta);
    const oracle::PowComponents pc = oracle::PlainPow(theta, records[i]);
    failures["pow"] += phe::CloudRsaDecrypt(rsa, pr.int_ct.ct) != pc.int_part ||
                       phe::CloudRsaDecrypt(rsa, pr.frac_ct.ct) != pc.frac_part ||
                       pr.int_ct.scale != pc.int_scale ||
                       pr.frac_ct.scale != pc.frac_scale;

    const int r = blocks::DrawBlindExponent(rng);
    const ScaledPaillier conv = blocks::ConvertRsaToPaillier(ctx, 1, pr, r);
    failures["conv7"] +=
        dec(conv) != oracle::PlainPowerConversion(pc, encoding::BlindFactor(r),
                                                  kProtocolScale,
                                                  encoding::kFracDigits);

    const BigInt den = rng.UniformInt(10000, 1000000);
    const BigInt sb = encoding::BlindFactor(blocks::DrawBlindExponent(rng));
    const std::vector<ScaledPaillier> g =
        blocks::SigmoidRound(ctx, 1, i, enc(den, 4), sb, 6);
    for (int j = 0; j < kDim; ++j) {
      const BigInt want =
          TruncDiv(records[i][j] * Pow10(6 + 4 + 4 - 2), den * sb) * sb;
      failures["sigmoid"] += dec(g[j]) != want;
    }

    const BigInt s = rnd(1000000);
    failures["sign"] += blocks::SecureSign(ctx, 1, enc(s, 4)) != (s > 0);

    switch_batch.push_back(enc(a, 2));
    switch_expect.push_back(a);
    if (switch_batch.size() == 50) {
      const std::vector<ScaledPaillier> out =
          blocks::ConvertPaillierKey(ctx, 1, ctx.keys.pub, switch_batch);
      for (std::size_t j = 0; j < out.size(); ++j) {
        failures["conv8"] += ctx.Decrypt(out[j]) != switch_expect[j];
      }
      switch_batch.clear();
      switch_expect.clear();
    }
  }
  Record("AC3 blocks", dep.session().transcript());

  std::string sums;
  int sum_fail = 0;
  for (int n : {2, 5, 10}) {
    SetupOptions so;
    so.key_bits = 512;
    so.seed = 300 + n;
    Deployment sdep(std::vector<data::Dataset>(n, testing::Synthetic(1, 1, 1)),
                    so);
    std::vector<BigInt> expect(100, BigInt(0));
    for (int i = 1; i <= n; ++i) {
      std::vector<BigInt> v;
      for (int j = 0; j < 100; ++j) {
        v.push_back(rnd(1000000000000LL));
        expect[j] += v.back();
      }
      sdep.owner(i).SetSumSource("v", v);
    }
    const bool ok = blocks::SecureSum(sdep.demander(), "v") == expect;
    sum_fail += !ok;
    sums += " n=" + std::to_string(n) + (ok ? ":ok" : ":FAIL");
    Record("AC3 secure_sum n=" + std::to_string(n),
           sdep.session().transcript());
  }

  int total = sum_fail;
  std::string detail;
  for (const auto& [name, f] : failures) {
    total += f;
    detail += name + ":" + std::to_string(f) + " ";
  }
  return {total == 0, std::to_string(kTrials) + " inputs, failures " + detail +
                          "| secure_sum" + sums};
}

Outcome Ac4TraceEquivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  const data::Dataset d = testing::Synthetic(20, 3, 44);
  TrainConfig cfg;
  cfg.key_bits = 512;
  cfg.max_iters = 50;
  cfg.seed = 45;
  cfg.theta_l1_bound = 20;

  SetupOptions opts;
  opts.key_bits = 512;
  opts.seed = 45;
  Deployment svm_dep(data::Partition(d, 3, 46), opts);
  TrainConfig svm_cfg = cfg;
  svm_cfg.lambda = 0.1;
  const auto svm = protocols::SvmTrain(svm_dep, svm_cfg);
  const bool svm_ok =
      svm.trace == oracle::QuantizedSvmTrace(svm_dep.Pooled(), svm_cfg);
  Record("AC4 svm", svm_dep.session().transcript());

  opts.rsa_bits = protocols::RsaBitsFor(4, cfg.theta_l1_bound, 512);
  Deployment lr_dep(data::Partition(d, 3, 46), opts);
  TrainConfig lr_cfg = cfg;
  lr_cfg.lambda = 0.5;
  const auto lr = protocols::LrTrain(lr_dep, lr_cfg);
  const bool lr_ok =
      lr.trace == oracle::QuantizedLrTrace(lr_dep.Pooled(), lr_cfg);
  Record("AC4 lr", lr_dep.session().transcript());
  const double secs = Seconds(t0);
  return {svm_ok && lr_ok && secs < 300,
          std::string("svm ") + (svm_ok ? "identical" : "DIVERGED") + ", lr " +
              (lr_ok ? "identical" : "DIVERGED") + " over 50 iterations, " +
              Fmt(secs, 1) + "s"};
}

Outcome Ac5NbExact(std::uint64_t* nb_interactions, int* n_families) {
  const RunSpec spec = BcwdSpec(Protocol::kNb, 1024, 1, 5);
  const protocols::PreparedData prep = protocols::Prepare(spec);
  SetupOptions opts;
  opts.key_bits = spec.key_bits;
  opts.seed = spec.seed;
  Deployment dep(prep.shards, opts);
  TrainConfig cfg;
  cfg.key_bits = spec.key_bits;
  const protocols::NbTrainResult secure = protocols::NbTrain(dep, prep.schema, cfg);
  const protocols::NbStats plain_stats =
      protocols::LocalNbStats(dep.Pooled(), prep.schema);
  const protocols::NbModel plain =
      oracle::PlainNb(dep.Pooled(), prep.schema, false);
  std::vector<int> ps;
  std::vector<int> pp;
  for (std::size_t i = 0; i < prep.test.size(); ++i) {
    ps.push_back(protocols::NbPredict(secure.model, prep.test.x[i],
                                      prep.test.category[i]));
    pp.push_back(
        protocols::NbPredict(plain, prep.test.x[i], prep.test.category[i]));
  }
  const double as = protocols::Accuracy(ps, prep.test.labels);
  const double ap = protocols::Accuracy(pp, prep.test.labels);
  Record("AC5 nb", dep.session().transcript());
  *nb_interactions = dep.session().interactions();
  *n_families = 0;
  for (const auto* v : {&plain_stats.class_count, &plain_stats.discrete_count,
                        &plain_stats.sum_x, &plain_stats.sum_x2}) {
    *n_families += !v->empty();
  }
  const bool ok = secure.stats == plain_stats && secure.model == plain && as == ap;
  return {ok, std::string("statistics ") +
                  (secure.stats == plain_stats ? "identical" : "DIFFER") +
                  ", accuracy secure " + Fmt(as) + " plain " + Fmt(ap)};
}

Outcome Ac6Accuracy(const Profile& prof) {
  bool ok = true;
  std::string detail = "profile " + prof.name + ":";
  for (Protocol p : {Protocol::kLr, Protocol::kSvm, Protocol::kNb}) {
    detail += " " + protocols::ProtocolName(p) + "=";
    for (std::uint64_t seed : {1, 2, 3}) {
      RunSpec spec = BcwdSpec(p, prof.key_bits, prof.iters, seed);
      spec.quantized_oracle = true;
      const protocols::RunResult r = protocols::Run(spec);
      Audits().emplace_back("AC6 " + protocols::ProtocolName(p) + " seed " +
                                std::to_string(seed),
                            r.audit);
      const bool within = std::abs(r.accuracy - *r.oracle_accuracy) <= 0.005;
      const bool run_ok = r.accuracy >= prof.threshold && within &&
                          r.trace_match.value_or(false);
      ok = ok && run_ok;
      detail += Fmt(r.accuracy, 3) + (run_ok ? "" : "!") + "/";
    }
    detail.pop_back();
  }
  return {ok, detail + " (threshold " + Fmt(prof.threshold, 2) +
                  ", oracle gap <= 0.005)"};
}

Outcome Ac7Interactions(std::uint64_t nb_interactions, int n_families) {
  const data::Dataset d = testing::Synthetic(30, 2, 70);
  TrainConfig cfg;
  cfg.key_bits = 512;
  cfg.max_iters = 1000;
  cfg.seed = 71;
  cfg.lambda = 0.1;
  cfg.theta_l1_bound = 20;
  SetupOptions opts;
  opts.key_bits = 512;
  opts.seed = 71;
  opts.rsa_bits = protocols::RsaBitsFor(3, cfg.theta_l1_bound, 512);
  Deployment lr_dep(data::Partition(d, 3, 72), opts);
  protocols::LrTrain(lr_dep, cfg);
  const std::uint64_t lr = lr_dep.session().interactions();
  Record("AC7 lr", lr_dep.session().transcript());

  RunSpec spec = BcwdSpec(Protocol::kSvm, 1024, 1000, 73);
  const protocols::RunResult svm = protocols::Run(spec);
  Audits().emplace_back("AC7 svm", svm.audit);
  const std::uint64_t svm_i = svm.metrics.at("interactions").get<std::uint64_t>();

  const std::uint64_t nb_want = static_cast<std::uint64_t>(n_families) * 6;
  const bool ok = lr == 4000 && svm_i <= 3000 && nb_interactions == nb_want;
  return {ok, "lr T=1000: " + std::to_string(lr) + ", svm T=1000: " +
                  std::to_string(svm_i) + ", nb 5 owners: " +
                  std::to_string(nb_interactions) + " = " +
                  std::to_string(n_families) + " families x (n+1)"};
}

Outcome Ac8DigitBudget() {
  TrainConfig cfg;
  cfg.key_bits = 1024;
  cfg.theta_l1_bound = 300;
  try {
    protocols::CheckLrBudget(14, cfg);
  } catch (const Error& e) {
    const std::string msg = e.what();
    const bool ok = e.code() == ErrorCode::kBudgetExceeded &&
                    msg.find("margin") != std::string::npos &&
                    msg.find("626") != std::string::npos;
    return {ok, msg};
  }
  return {false, "configuration was admitted"};
}

Outcome Ac9Audit() {
  int failed = 0;
  std::string which;
  for (const auto& [name, report] : Audits()) {
    if (!report.pass()) {
      ++failed;
      which += " " + name + ": " + report.Summary();
    }
  }
  RunSpec skip = BcwdSpec(Protocol::kSvm, 1024, 30, 91);
  skip.faults.skip_sign_blinding = true;
  const net::AuditReport rs = protocols::Run(skip).audit;
  RunSpec reuse = BcwdSpec(Protocol::kSvm, 1024, 30, 92);
  reuse.faults.reuse_nonce = true;
  const net::AuditReport rr = protocols::Run(reuse).audit;
  const bool faults_ok = !rs.pass() && rs.Has('b') && !rr.pass() && rr.Has('c');
  return {failed == 0 && faults_ok,
          std::to_string(Audits().size() - failed) + "/" +
              std::to_string(Audits().size()) + " runs pass" + which +
              "; skipped rho -> " + (rs.Has('b') ? "(b)" : "not flagged") +
              ", reused nonce -> " + (rr.Has('c') ? "(c)" : "not flagged")};
}

Outcome Ac10Determinism() {
  std::string detail;
  bool ok = true;
  for (Protocol p : {Protocol::kNb, Protocol::kSvm}) {
    const RunSpec spec = BcwdSpec(p, 1024, 60, 101);
    const protocols::RunResult a = protocols::Run(spec);
    const protocols::RunResult b = protocols::Run(spec);
    Audits().emplace_back("AC10 " + protocols::ProtocolName(p), a.audit);
    const bool same_t = a.transcript.lines == b.transcript.lines;
    const bool same_m = protocols::MaskWallClock(a.metrics).dump() ==
                        protocols::MaskWallClock(b.metrics).dump();
    ok = ok && same_t && same_m;
    detail += protocols::ProtocolName(p) + " transcript " +
              (same_t ? "identical" : "DIFFERS") + ", metrics " +
              (same_m ? "identical" : "DIFFER") + "; ";
  }
  auto lr_lines = [] {
    const data::Dataset d = testing::Synthetic(12, 2, 102);
    TrainConfig cfg;
    cfg.key_bits = 512;
    cfg.max_iters = 10;
    cfg.seed = 103;
    cfg.lambda = 0.5;
    cfg.theta_l1_bound = 10;
    SetupOptions opts;
    opts.key_bits = 512;
    opts.seed = 103;
    opts.rsa_bits = protocols::RsaBitsFor(3, cfg.theta_l1_bound, 512);
    Deployment dep(data::Partition(d, 2, 104), opts);
    protocols::LrTrain(dep, cfg);
    return dep.session().transcript().lines;
  };
  const bool same_lr = lr_lines() == lr_lines();
  ok = ok && same_lr;
  detail += std::string("lr transcript ") + (same_lr ? "identical" : "DIFFERS") +
            " (wall-clock fields excluded from metrics comparison)";
  return {ok, detail};
}

}  // namespace
}  // namespace pheml

int main() {
  using pheml::Outcome;
  const pheml::Profile prof = pheml::ActiveProfile();
  int failures = 0;
  // AC9 audits every transcript the other criteria produced, so it runs
  // last; its line is still printed before AC10's.
  std::string held;
  auto report = [&](const std::string& id, const std::string& title,
                    const std::function<Outcome()>& fn, bool hold = false) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::ostringstream line;
    line << (o.pass ? "[PASS] " : "[FAIL] ") << id << " " << title << " -- "
         << o.detail << " [" << pheml::Fmt(pheml::Seconds(t0), 1) << "s]\n";
    if (hold) {
      held = line.str();
    } else {
      std::cout << line.str() << held << std::flush;
    }
  };
  std::uint64_t nb_interactions = 0;
  int n_families = 0;
  report("AC1", "homomorphism suites", pheml::Ac1Homomorphisms);
  report("AC2", "worked-example golden values", pheml::Ac2WorkedExample);
  report("AC3", "block-oracle equivalence", pheml::Ac3BlockOracle);
  report("AC4", "quantized-trace equivalence", pheml::Ac4TraceEquivalence);
  report("AC5", "NB exactness", [&] {
    return pheml::Ac5NbExact(&nb_interactions, &n_families);
  });
  report("AC6", "BCWD accuracy", [&] { return pheml::Ac6Accuracy(prof); });
  report("AC7", "interaction accounting", [&] {
    return pheml::Ac7Interactions(nb_interactions, n_families);
  });
  report("AC8", "digit-budget guard", pheml::Ac8DigitBudget);
  report("AC10", "determinism", pheml::Ac10Determinism, true);
  report("AC9", "blinding audit", pheml::Ac9Audit);
  std::cout << (failures == 0 ? "all criteria pass" : "some criteria fail")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
