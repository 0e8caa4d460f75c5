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
// Command-line front end: key generation, protocol runs, and block
// microbenchmarks.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pheml/common/error.h"
#include "pheml/common/rng.h"
#include "pheml/phe/cloud_rsa.h"
#include "pheml/phe/key_io.h"
#include "pheml/phe/paillier.h"
#include "pheml/protocols/bench.h"
#include "pheml/protocols/run.h"

namespace {

using pheml::Error;
using pheml::ErrorCode;

constexpr int kExitUsage = 2;
constexpr int kExitAudit = 3;
constexpr int kExitOracle = 4;

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
}

std::string TranscriptPath(const std::string& metrics_path) {
  std::filesystem::path p(metrics_path);
  p.replace_extension(".transcript.jsonl");
  return p.string();
}

int ExitCodeFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kBudgetExceeded:
      return kExitUsage;
    default:
      return 1;
  }
}

int CmdRun(pheml::protocols::RunSpec spec, const std::string& protocol,
           const std::string& out) {
  spec.protocol = pheml::protocols::ParseProtocol(protocol);
  if (spec.schema.empty()) {
    std::filesystem::path p(spec.dataset);
    spec.schema = p.replace_extension(".schema.json").string();
  }
  if (const char* env = std::getenv("HEDA_SEED")) {
    try {
      spec.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("HEDA_SEED is not an unsigned integer: ") + env);
    }
  }
  const pheml::protocols::RunResult res = pheml::protocols::Run(spec);
  WriteFile(out, res.metrics.dump(2) + "\n");
  res.transcript.ExportJsonl(TranscriptPath(out));
  std::cout << "accuracy " << res.accuracy << "\n"
            << "interactions " << res.metrics["interactions"] << "\n"
            << "bytes " << res.metrics["bytes"] << "\n";
  if (res.oracle_accuracy) {
    std::cout << "oracle accuracy " << *res.oracle_accuracy << "\n";
  }
  if (!res.audit.pass()) {
    std::cerr << "transcript audit failed:\n" << res.audit.Summary() << "\n";
    return kExitAudit;
  }
  if (res.trace_match && !*res.trace_match) {
    std::cerr << "secure run diverged from the quantized oracle";
    if (res.first_trace_mismatch >= 0) {
      std::cerr << " at iteration " << res.first_trace_mismatch + 1;
    }
    std::cerr << "\n";
    return kExitOracle;
  }
  if (res.trace_match) std::cout << "oracle traces identical\n";
  return 0;
}

int CmdKeygen(const std::string& kind, int bits, const std::string& out,
              bool public_only, std::uint64_t seed) {
  pheml::Rng rng = pheml::Rng(seed).Fork("keygen/" + kind);
  std::string text;
  std::string key_id;
  if (kind == "paillier") {
    const pheml::phe::PaillierKeyPair kp = pheml::phe::PaillierKeygen(bits, rng);
    text = public_only ? pheml::phe::SerializePaillierPublicKey(kp.pub)
                       : pheml::phe::SerializePaillierPrivateKey(kp.priv);
    key_id = kp.pub.key_id;
  } else if (kind == "cloudrsa") {
    const pheml::phe::CloudRsaKeyMaterial key =
        pheml::phe::CloudRsaKeygen(bits, rng);
    text = pheml::phe::SerializeCloudRsaKey(key, public_only);
    key_id = key.key_id;
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown key kind '" + kind + "' (expected paillier or cloudrsa)");
  }
  WriteFile(out, text + "\n");
  std::cout << key_id << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partially homomorphic privacy-preserving training simulator"};
  app.require_subcommand(1);

  pheml::protocols::RunSpec spec;
  spec.latency_ms = 30;
  std::string protocol;
  std::string metrics_out = "metrics.json";
  double lambda = 0;
  CLI::App* run = app.add_subcommand("run", "Run a training protocol");
  run->add_option("--protocol", protocol, "lr, svm or nb")->required();
  run->add_option("--dataset", spec.dataset, "CSV file")->required();
  run->add_option("--schema", spec.schema,
                  "Schema JSON (default: dataset path with .schema.json)");
  run->add_option("--owners", spec.owners)->capture_default_str();
  run->add_option("--key-bits", spec.key_bits)->capture_default_str();
  run->add_option("--iters", spec.iters)->capture_default_str();
  CLI::Option* lambda_opt =
      run->add_option("--lambda", lambda, "Step size (lr: 0.5, svm: 0.1)");
  run->add_option("--alpha", spec.alpha)->capture_default_str();
  run->add_option("--latency-ms", spec.latency_ms)->capture_default_str();
  run->add_option("--seed", spec.seed, "Overridden by HEDA_SEED")
      ->capture_default_str();
  run->add_option("--out", metrics_out, "Metrics JSON path")
      ->capture_default_str();
  run->add_option("--test-fraction", spec.test_fraction)->capture_default_str();
  run->add_flag("--quantized-oracle", spec.quantized_oracle,
                "Run the plaintext oracle alongside and diff traces");

  int bench_bits = 1024;
  int trials = 5;
  std::string bench_out = "blocks.csv";
  std::uint64_t bench_seed = 1;
  CLI::App* bench =
      app.add_subcommand("bench-blocks", "Time each building block");
  bench->add_option("--key-bits", bench_bits)->capture_default_str();
  bench->add_option("--trials", trials)->capture_default_str();
  bench->add_option("--out", bench_out)->capture_default_str();
  bench->add_option("--seed", bench_seed)->capture_default_str();

  std::string kind;
  int key_bits = 2048;
  std::string key_out;
  bool public_only = false;
  std::uint64_t key_seed = 1;
  CLI::App* keygen = app.add_subcommand("keygen", "Generate a key file");
  keygen->add_option("kind", kind, "paillier or cloudrsa")->required();
  keygen->add_option("--bits", key_bits)->capture_default_str();
  keygen->add_option("--out", key_out)->required();
  keygen->add_flag("--public-only", public_only);
  keygen->add_option("--seed", key_seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*run) {
      if (*lambda_opt) spec.lambda = lambda;
      return CmdRun(spec, protocol, metrics_out);
    }
    if (*bench) {
      const std::string csv = pheml::protocols::BenchCsv(
          pheml::protocols::BenchBlocks(bench_bits, trials, bench_seed));
      WriteFile(bench_out, csv);
      std::cout << csv;
      return 0;
    }
    return CmdKeygen(kind, key_bits, key_out, public_only, key_seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
