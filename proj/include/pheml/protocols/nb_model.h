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
#ifndef PHEML_PROTOCOLS_NB_MODEL_H_
#define PHEML_PROTOCOLS_NB_MODEL_H_

#include <cstddef>
#include <vector>

#include "pheml/common/bigint.h"
#include "pheml/data/dataset.h"

namespace pheml::protocols {

inline constexpr int kNbClasses = 2;
inline constexpr double kVarianceFloor = 1e-9;

// Flattened index layout of the naive Bayes statistics for a schema.
struct NbLayout {
  std::vector<std::size_t> discrete;   // feature indices
  std::vector<std::size_t> numeric;
  std::vector<std::size_t> offset;     // per discrete feature, within a class
  std::size_t discrete_per_class = 0;

  static NbLayout For(const data::DatasetSchema& schema);
  std::size_t DiscreteIndex(int c, std::size_t k, int v) const {
    return c * discrete_per_class + offset[k] + v;
  }
  std::size_t NumericIndex(int c, std::size_t k) const {
    return c * numeric.size() + k;
  }
};

// Integer statistics; numeric sums are over scale-2 mantissas (sum_x at
// scale 2, sum_x2 at scale 4).
struct NbStats {
  std::vector<BigInt> class_count;
  std::vector<BigInt> discrete_count;
  std::vector<BigInt> sum_x;
  std::vector<BigInt> sum_x2;

  friend bool operator==(const NbStats&, const NbStats&) = default;
};

struct NbModel {
  std::vector<double> priors;                           // [class]
  std::vector<std::vector<std::vector<double>>> cond;   // [class][k][value]
  std::vector<std::vector<double>> mu;                  // [class][k]
  std::vector<std::vector<double>> sigma_sq;            // [class][k]
  std::size_t m = 0;
  NbLayout layout;

  friend bool operator==(const NbModel& a, const NbModel& b) {
    return a.priors == b.priors && a.cond == b.cond && a.mu == b.mu &&
           a.sigma_sq == b.sigma_sq && a.m == b.m;
  }
};

NbStats LocalNbStats(const data::Dataset& d, const data::DatasetSchema& schema);
NbModel ModelFromStats(const NbStats& s, const data::DatasetSchema& schema,
                       bool smoothing);
// Argmax of log P(y) + sum log P(x_j | y); falls back to the prior when
// every class has zero likelihood.
int NbPredict(const NbModel& model, const std::vector<double>& x,
              const std::vector<int>& category);

}  // namespace pheml::protocols

#endif  // PHEML_PROTOCOLS_NB_MODEL_H_
