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
#ifndef PHEML_ORACLE_PLAIN_H_
#define PHEML_ORACLE_PLAIN_H_

#include <vector>

#include "pheml/common/bigint.h"
#include "pheml/data/dataset.h"
#include "pheml/protocols/config.h"
#include "pheml/protocols/nb_model.h"

namespace pheml::oracle {

// Plaintext reference trainers. "Quantized" runs truncate at exactly the
// points where the secure pipeline encodes, with the same sampling and
// blinding draws, so their traces must match integer for integer. "Exact"
// runs use doubles throughout. Data is the pooled training set in owner
// order.

std::vector<std::vector<BigInt>> QuantizedSvmTrace(
    const data::Dataset& d, const protocols::TrainConfig& cfg);
std::vector<std::vector<double>> ExactSvmTrace(
    const data::Dataset& d, const protocols::TrainConfig& cfg);

std::vector<std::vector<BigInt>> QuantizedLrTrace(
    const data::Dataset& d, const protocols::TrainConfig& cfg);
std::vector<std::vector<double>> ExactLrTrace(
    const data::Dataset& d, const protocols::TrainConfig& cfg);

// One quantized LR step for record x^ (scale-2 mantissas with bias) and
// label y, with the two blinding factors given.
std::vector<BigInt> QuantizedLrStep(const std::vector<BigInt>& theta,
                                    const std::vector<BigInt>& x, int y,
                                    const BigInt& lambda, const BigInt& b1,
                                    const BigInt& b2);

// e^{-theta^T x} as the owner would recover it, before any re-encoding:
// returns the exact integer power components and their scales.
struct PowComponents {
  BigInt int_part;
  int int_scale = 0;
  BigInt frac_part;
  int frac_scale = 0;
};
PowComponents PlainPow(const std::vector<BigInt>& theta,
                       const std::vector<BigInt>& x);

// Blinded power conversion followed by unblinding: the owner's reply
// fx(blinded power, reply_scale) times fx(unblind factor, frac_digits),
// split into integer and fractional parts. Result at reply_scale +
// frac_digits.
BigInt PlainPowerConversion(const PowComponents& p, const BigInt& blind,
                            int reply_scale, int frac_digits);

protocols::NbModel PlainNb(const data::Dataset& d,
                           const data::DatasetSchema& schema, bool smoothing);

// Gaussian statistics computed two ways, for cross-checking.
struct GaussianCheck {
  double mu = 0;
  double var_direct = 0;     // sum (x - mu)^2 / n
  double var_expanded = 0;   // sum x^2 / n - 2 mu sum x / n + mu^2
};
GaussianCheck Gaussian(const std::vector<double>& values);

double LogLoss(const std::vector<double>& theta, const data::Dataset& d);

// Small-modulus crypto references written straight from the textbook
// formulas, independent of the CRT code paths.
BigInt PaillierEncryptDirect(const BigInt& n, const BigInt& m, const BigInt& r);
BigInt PaillierDecryptDirect(const BigInt& n, const BigInt& phi,
                             const BigInt& c);
// m^e mod n by repeated multiplication.
BigInt RsaPowNaive(const BigInt& m, unsigned long e, const BigInt& n);

}  // namespace pheml::oracle

#endif  // PHEML_ORACLE_PLAIN_H_
