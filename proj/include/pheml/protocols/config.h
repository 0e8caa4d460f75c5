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
#ifndef PHEML_PROTOCOLS_CONFIG_H_
#define PHEML_PROTOCOLS_CONFIG_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "pheml/common/bigint.h"
#include "pheml/common/rng.h"

namespace pheml::protocols {

// Named randomness streams derived from the run seed. The plaintext oracle
// draws from the same streams, in the same order, as the secure drivers.
inline constexpr char kStreamSampling[] = "sgd-sampling";
inline constexpr char kStreamExpBlind[] = "exp-blind";
inline constexpr char kStreamCrypto[] = "crypto";
inline constexpr char kStreamSplit[] = "split";
inline constexpr char kStreamPartition[] = "partition";

inline Rng Stream(std::uint64_t seed, std::string_view label) {
  return Rng(seed).Fork(label);
}

// Internal scales of the logistic-regression iteration.
inline constexpr int kLrReplyScale = 8;     // owner's blinded power reply
inline constexpr int kLrUnblindDigits = 8;  // fraction digits of unblinding
inline constexpr int kLrSigmoidScale = 12;  // owner's quotient reply
// The e^{-theta^T x} estimate lives at kLrReplyScale + kLrUnblindDigits.
inline constexpr int kLrExpScale = kLrReplyScale + kLrUnblindDigits;

struct TrainConfig {
  double lambda = 0.1;  // learning rate
  double alpha = 0.0;   // SVM regularization
  int max_iters = 200;
  int batch = 1;
  std::uint64_t seed = 1;
  int key_bits = 1024;
  // Bound on sum |theta_j| used to admit LR runs and size Cloud-RSA keys.
  double theta_l1_bound = 100;
  bool nb_smoothing = false;
  // Scale-2 mantissas, bias last; empty starts from zeros.
  std::vector<BigInt> initial_theta;

  // Throws kInvalidArgument on a bad configuration.
  void Validate() const;
  std::vector<BigInt> InitialTheta(std::size_t dim) const;
};

// Scale-2 mantissas of a record with the constant bias feature appended.
std::vector<BigInt> QuantizeRecord(const std::vector<double>& x);

// Global index of the record used by each iteration.
std::vector<std::size_t> SampleSchedule(std::uint64_t seed, int iters,
                                        std::size_t m);

}  // namespace pheml::protocols

#endif  // PHEML_PROTOCOLS_CONFIG_H_
