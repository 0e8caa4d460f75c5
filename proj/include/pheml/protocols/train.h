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
#ifndef PHEML_PROTOCOLS_TRAIN_H_
#define PHEML_PROTOCOLS_TRAIN_H_

#include <vector>

#include "pheml/common/bigint.h"
#include "pheml/data/dataset.h"
#include "pheml/protocols/config.h"
#include "pheml/protocols/nb_model.h"
#include "pheml/protocols/setup.h"

namespace pheml::protocols {

// Linear model held by the demander: scale-2 mantissas, bias last.
struct ModelParams {
  std::vector<BigInt> theta;
  int iteration = 0;

  std::vector<double> Values() const;
};

struct LinearTrainResult {
  ModelParams model;
  // theta after every iteration.
  std::vector<std::vector<BigInt>> trace;
};

// Hinge-loss SGD with labels mapped to {-1, +1}. Per iteration: one sign
// round, plus one key switch when the margin is violated.
LinearTrainResult SvmTrain(Deployment& dep, const TrainConfig& cfg);

// Logistic-regression SGD with labels in {0, 1}. Per iteration: vector
// pull, power conversion, sigmoid round, key switch.
LinearTrainResult LrTrain(Deployment& dep, const TrainConfig& cfg);

// Pre-flight digit budget of an LR run; throws kBudgetExceeded.
void CheckLrBudget(int d, const TrainConfig& cfg);

struct NbTrainResult {
  NbStats stats;
  NbModel model;
};

// One secure summation per statistic family.
NbTrainResult NbTrain(Deployment& dep, const data::DatasetSchema& schema,
                      const TrainConfig& cfg);

// Test-time rules: SVM predicts positive when theta^T x >= 0, LR when
// sigmoid(theta^T x) >= 0.5. Features are quantized as in training.
int SvmPredict(const std::vector<BigInt>& theta, const std::vector<double>& x);
int LrPredict(const std::vector<BigInt>& theta, const std::vector<double>& x);

double Accuracy(const std::vector<int>& preds, const std::vector<int>& labels);

}  // namespace pheml::protocols

#endif  // PHEML_PROTOCOLS_TRAIN_H_
