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
#ifndef PHEML_PROTOCOLS_RUN_H_
#define PHEML_PROTOCOLS_RUN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pheml/data/dataset.h"
#include "pheml/net/audit.h"
#include "pheml/net/envelope.h"
#include "pheml/net/session.h"

namespace pheml::protocols {

enum class Protocol { kLr, kSvm, kNb };

std::string ProtocolName(Protocol p);
Protocol ParseProtocol(const std::string& name);

struct RunSpec {
  Protocol protocol = Protocol::kLr;
  std::string dataset;
  std::string schema;
  int owners = 5;
  int key_bits = 1024;
  int iters = 200;
  // Unset: the protocol's default step size.
  std::optional<double> lambda;
  double alpha = 0.0;
  int latency_ms = 0;
  std::uint64_t seed = 1;
  double test_fraction = 0.3;
  bool quantized_oracle = false;
  bool nb_smoothing = false;
  net::FaultFlags faults;
};

double DefaultLambda(Protocol p);

// The data side of a run: schema, normalized train/test parts (normalizer
// fitted on train only), and the per-owner shards of the train part.
struct PreparedData {
  data::DatasetSchema schema;
  data::Dataset train;
  data::Dataset test;
  std::vector<data::Dataset> shards;
};

PreparedData Prepare(const RunSpec& spec);

struct RunResult {
  net::Json metrics;
  net::AuditReport audit;
  net::Transcript transcript;
  double accuracy = 0;
  // Filled when RunSpec::quantized_oracle is set.
  std::optional<double> oracle_accuracy;
  std::optional<bool> trace_match;
  int first_trace_mismatch = -1;
};

// Load, split, normalize, partition, train in-simulator, evaluate on the
// held-out rows, and audit the transcript.
RunResult Run(const RunSpec& spec);

// Checks keys and value types of a metrics object; throws kInvalidArgument.
void ValidateMetrics(const net::Json& metrics);

// Metrics with the hardware-dependent timing fields removed.
net::Json MaskWallClock(const net::Json& metrics);

}  // namespace pheml::protocols

#endif  // PHEML_PROTOCOLS_RUN_H_
