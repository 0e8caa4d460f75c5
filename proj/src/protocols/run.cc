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
#include "pheml/protocols/run.h"

#include <chrono>
#include <filesystem>

#include "pheml/common/error.h"
#include "pheml/oracle/plain.h"
#include "pheml/protocols/train.h"

namespace pheml::protocols {
namespace {

double MsSince(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<int> PredictLinear(Protocol p, const std::vector<BigInt>& theta,
                               const data::Dataset& d) {
  std::vector<int> out;
  for (const auto& x : d.x) {
    out.push_back(p == Protocol::kSvm ? SvmPredict(theta, x)
                                      : LrPredict(theta, x));
  }
  return out;
}

}  // namespace

std::string ProtocolName(Protocol p) {
  switch (p) {
    case Protocol::kLr:
      return "lr";
    case Protocol::kSvm:
      return "svm";
    case Protocol::kNb:
      return "nb";
  }
  return "";
}

Protocol ParseProtocol(const std::string& name) {
  if (name == "lr") return Protocol::kLr;
  if (name == "svm") return Protocol::kSvm;
  if (name == "nb") return Protocol::kNb;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown protocol '" + name + "' (expected lr, svm or nb)");
}

double DefaultLambda(Protocol p) { return p == Protocol::kLr ? 0.5 : 0.1; }

PreparedData Prepare(const RunSpec& spec) {
  if (spec.owners < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one owner");
  }
  PreparedData p;
  p.schema = data::DatasetSchema::Load(spec.schema);
  const data::RawTable raw = data::LoadCsv(spec.dataset, p.schema);
  auto [train_raw, test_raw] = data::Split(
      raw, spec.test_fraction, Stream(spec.seed, kStreamSplit).NextU64());
  const data::Normalizer norm = data::Normalizer::Fit(train_raw, p.schema);
  p.train = data::Normalize(train_raw, p.schema, norm);
  p.test = data::Normalize(test_raw, p.schema, norm);
  if (p.train.size() < static_cast<std::size_t>(spec.owners)) {
    throw Error(ErrorCode::kInvalidArgument,
                "fewer training records than owners");
  }
  p.shards = data::Partition(p.train, spec.owners,
                             Stream(spec.seed, kStreamPartition).NextU64());
  return p;
}

RunResult Run(const RunSpec& spec) {
  TrainConfig cfg;
  cfg.lambda = spec.lambda.value_or(DefaultLambda(spec.protocol));
  cfg.alpha = spec.alpha;
  cfg.max_iters = spec.iters;
  cfg.seed = spec.seed;
  cfg.key_bits = spec.key_bits;
  cfg.nb_smoothing = spec.nb_smoothing;
  cfg.Validate();

  PreparedData prep = Prepare(spec);
  const data::DatasetSchema& schema = prep.schema;
  const data::Dataset& test = prep.test;
  const int dim = static_cast<int>(prep.train.dim()) + 1;
  if (spec.protocol == Protocol::kLr) CheckLrBudget(dim, cfg);

  SetupOptions opts;
  opts.key_bits = spec.key_bits;
  opts.latency_ms = spec.latency_ms;
  opts.seed = spec.seed;
  opts.faults = spec.faults;
  if (spec.protocol == Protocol::kLr) {
    opts.rsa_bits = RsaBitsFor(dim, cfg.theta_l1_bound, spec.key_bits);
  }
  Deployment dep(std::move(prep.shards), opts);

  RunResult res;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<int> preds;
  std::vector<std::vector<BigInt>> trace;
  if (spec.protocol == Protocol::kNb) {
    const NbTrainResult nb = NbTrain(dep, schema, cfg);
    for (std::size_t i = 0; i < test.size(); ++i) {
      preds.push_back(NbPredict(nb.model, test.x[i], test.category[i]));
    }
    if (spec.quantized_oracle) {
      const NbModel plain =
          oracle::PlainNb(dep.Pooled(), schema, cfg.nb_smoothing);
      std::vector<int> oracle_preds;
      for (std::size_t i = 0; i < test.size(); ++i) {
        oracle_preds.push_back(NbPredict(plain, test.x[i], test.category[i]));
      }
      res.trace_match = plain == nb.model;
      res.oracle_accuracy = Accuracy(oracle_preds, test.labels);
    }
  } else {
    LinearTrainResult lin = spec.protocol == Protocol::kSvm
                                ? SvmTrain(dep, cfg)
                                : LrTrain(dep, cfg);
    preds = PredictLinear(spec.protocol, lin.model.theta, test);
    trace = std::move(lin.trace);
  }
  dep.session().Close();
  const double wall_ms = MsSince(t0);

  if (spec.quantized_oracle && spec.protocol != Protocol::kNb) {
    const data::Dataset pooled = dep.Pooled();
    const std::vector<std::vector<BigInt>> plain =
        spec.protocol == Protocol::kSvm ? oracle::QuantizedSvmTrace(pooled, cfg)
                                        : oracle::QuantizedLrTrace(pooled, cfg);
    res.trace_match = plain == trace;
    for (std::size_t i = 0; i < plain.size() && i < trace.size(); ++i) {
      if (plain[i] != trace[i]) {
        res.first_trace_mismatch = static_cast<int>(i);
        break;
      }
    }
    res.oracle_accuracy = Accuracy(
        PredictLinear(spec.protocol,
                      plain.empty() ? std::vector<BigInt>(dim, BigInt(0))
                                    : plain.back(),
                      test),
        test.labels);
  }

  res.accuracy = Accuracy(preds, test.labels);
  res.transcript = dep.session().transcript();
  res.audit = net::AuditTranscript(res.transcript);
  const net::Session& s = dep.session();
  const double owner_ms = s.owner_wall_ms();
  res.metrics = net::Json{
      {"protocol", ProtocolName(spec.protocol)},
      {"dataset", std::filesystem::path(spec.dataset).stem().string()},
      {"n_owners", spec.owners},
      {"key_bits", spec.key_bits},
      {"iters", spec.protocol == Protocol::kNb ? 0 : spec.iters},
      {"accuracy", res.accuracy},
      {"interactions", s.interactions()},
      {"bytes", s.bytes()},
      {"sim_latency_ms", s.sim_latency_ms()},
      {"wall_ms_demander", wall_ms > owner_ms ? wall_ms - owner_ms : 0.0},
      {"wall_ms_owner_total", owner_ms},
      {"seed", spec.seed},
  };
  ValidateMetrics(res.metrics);
  return res;
}

}  // namespace pheml::protocols
