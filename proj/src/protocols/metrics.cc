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
#include <cstddef>

#include "pheml/common/error.h"
#include "pheml/encoding/fixed_point.h"
#include "pheml/protocols/run.h"
#include "pheml/protocols/train.h"

namespace pheml::protocols {
namespace {

BigInt Score(const std::vector<BigInt>& theta, const std::vector<double>& x) {
  const std::vector<BigInt> q = QuantizeRecord(x);
  if (q.size() != theta.size()) {
    throw Error(ErrorCode::kInvalidArgument, "model and record dimensions differ");
  }
  BigInt s = 0;
  for (std::size_t j = 0; j < q.size(); ++j) s += theta[j] * q[j];
  return s;
}

struct FieldSpec {
  const char* name;
  enum { kString, kInt, kNumber } type;
};

constexpr FieldSpec kMetricFields[] = {
    {"protocol", FieldSpec::kString},
    {"dataset", FieldSpec::kString},
    {"n_owners", FieldSpec::kInt},
    {"key_bits", FieldSpec::kInt},
    {"iters", FieldSpec::kInt},
    {"accuracy", FieldSpec::kNumber},
    {"interactions", FieldSpec::kInt},
    {"bytes", FieldSpec::kInt},
    {"sim_latency_ms", FieldSpec::kNumber},
    {"wall_ms_demander", FieldSpec::kNumber},
    {"wall_ms_owner_total", FieldSpec::kNumber},
    {"seed", FieldSpec::kInt},
};

}  // namespace

std::vector<double> ModelParams::Values() const {
  std::vector<double> out;
  for (const BigInt& t : theta) {
    out.push_back(encoding::FxDecode(t, encoding::kProtocolScale));
  }
  return out;
}

int SvmPredict(const std::vector<BigInt>& theta, const std::vector<double>& x) {
  return Score(theta, x) >= 0 ? 1 : 0;
}

// sigmoid(z) >= 0.5 exactly when z >= 0.
int LrPredict(const std::vector<BigInt>& theta, const std::vector<double>& x) {
  return Score(theta, x) >= 0 ? 1 : 0;
}

double Accuracy(const std::vector<int>& preds, const std::vector<int>& labels) {
  if (preds.size() != labels.size() || preds.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "accuracy needs equally sized, non-empty vectors");
  }
  std::size_t hit = 0;
  for (std::size_t i = 0; i < preds.size(); ++i) hit += preds[i] == labels[i];
  return static_cast<double>(hit) / static_cast<double>(preds.size());
}

void ValidateMetrics(const net::Json& metrics) {
  if (!metrics.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, "metrics must be an object");
  }
  for (const FieldSpec& f : kMetricFields) {
    if (!metrics.contains(f.name)) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("metrics missing field ") + f.name);
    }
    const net::Json& v = metrics.at(f.name);
    const bool ok = f.type == FieldSpec::kString ? v.is_string()
                    : f.type == FieldSpec::kInt  ? v.is_number_integer()
                                                 : v.is_number();
    if (!ok) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("metrics field has the wrong type: ") + f.name);
    }
  }
  if (metrics.size() != std::size(kMetricFields)) {
    throw Error(ErrorCode::kInvalidArgument, "metrics carry unknown fields");
  }
  const double acc = metrics.at("accuracy").get<double>();
  if (acc < 0 || acc > 1) {
    throw Error(ErrorCode::kInvalidArgument, "accuracy outside [0, 1]");
  }
}

net::Json MaskWallClock(const net::Json& metrics) {
  net::Json out = metrics;
  out.erase("wall_ms_demander");
  out.erase("wall_ms_owner_total");
  return out;
}

}  // namespace pheml::protocols
