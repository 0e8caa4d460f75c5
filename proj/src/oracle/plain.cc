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
#include "pheml/oracle/plain.h"

#include <cmath>

#include "pheml/blocks/interactive.h"
#include "pheml/common/error.h"
#include "pheml/encoding/fixed_point.h"

namespace pheml::oracle {
namespace {

using encoding::kProtocolScale;
using protocols::TrainConfig;

std::vector<double> WithBias(const std::vector<double>& x) {
  std::vector<double> out = x;
  out.push_back(1.0);
  return out;
}

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<double> InitialValues(const TrainConfig& cfg, std::size_t dim) {
  std::vector<double> out;
  for (const BigInt& t : cfg.InitialTheta(dim)) {
    out.push_back(encoding::FxDecode(t, kProtocolScale));
  }
  return out;
}

}  // namespace

std::vector<std::vector<BigInt>> QuantizedSvmTrace(const data::Dataset& d,
                                                   const TrainConfig& cfg) {
  const BigInt one4 = Pow10(4);
  const BigInt lam = encoding::FxEncode(cfg.lambda, kProtocolScale);
  const BigInt keep = one4 - lam * encoding::FxEncode(cfg.alpha, kProtocolScale);
  std::vector<BigInt> theta = cfg.InitialTheta(d.dim() + 1);
  std::vector<std::vector<BigInt>> trace;
  for (std::size_t t :
       protocols::SampleSchedule(cfg.seed, cfg.max_iters, d.size())) {
    const std::vector<BigInt> x = protocols::QuantizeRecord(d.x[t]);
    const int y = d.labels[t] == 1 ? 1 : -1;
    BigInt u = 0;
    for (std::size_t j = 0; j < x.size(); ++j) u += theta[j] * x[j] * y;
    const bool violated = one4 - u > 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      BigInt v = keep * theta[j];
      if (violated) v += x[j] * y * lam * 100;
      theta[j] = encoding::Truncate(v, 6, kProtocolScale);
    }
    trace.push_back(theta);
  }
  return trace;
}

std::vector<std::vector<double>> ExactSvmTrace(const data::Dataset& d,
                                               const TrainConfig& cfg) {
  std::vector<double> theta = InitialValues(cfg, d.dim() + 1);
  std::vector<std::vector<double>> trace;
  for (std::size_t t :
       protocols::SampleSchedule(cfg.seed, cfg.max_iters, d.size())) {
    const std::vector<double> x = WithBias(d.x[t]);
    const double y = d.labels[t] == 1 ? 1.0 : -1.0;
    const bool violated = y * Dot(theta, x) < 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      theta[j] = (1 - cfg.lambda * cfg.alpha) * theta[j] +
                 (violated ? cfg.lambda * y * x[j] : 0.0);
    }
    trace.push_back(theta);
  }
  return trace;
}

PowComponents PlainPow(const std::vector<BigInt>& theta,
                       const std::vector<BigInt>& x) {
  PowComponents p{BigInt(1), 0, BigInt(1), 0};
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const encoding::CoeffDecomposition c = encoding::DecomposeMantissa(theta[j]);
    const double v = encoding::FxDecode(x[j], kProtocolScale);
    const BigInt base = encoding::ExpMantissa(c.sign > 0 ? -v : v);
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), c.int_part.get_ui());
    p.int_part *= pw;
    p.int_scale += kProtocolScale * static_cast<int>(c.int_part.get_si());
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), c.frac_part);
    p.frac_part *= pw;
    p.frac_scale += kProtocolScale * static_cast<int>(c.frac_part);
  }
  return p;
}

BigInt PlainPowerConversion(const PowComponents& p, const BigInt& blind,
                            int reply_scale, int frac_digits) {
  const double v = encoding::RecoverPower(
      p.int_part * blind, p.int_scale + encoding::kBlindScale,
      p.frac_part * blind, p.frac_scale + encoding::kBlindScale);
  const BigInt w = encoding::FxEncode(v, reply_scale);
  const encoding::CoeffDecomposition u = encoding::DecomposeMantissa(
      encoding::FxEncode(encoding::UnblindFactor(blind), frac_digits),
      frac_digits);
  return w * u.int_part * Pow10(frac_digits) + w * u.frac_part;
}

std::vector<BigInt> QuantizedLrStep(const std::vector<BigInt>& theta,
                                    const std::vector<BigInt>& x, int y,
                                    const BigInt& lambda, const BigInt& b1,
                                    const BigInt& b2) {
  using protocols::kLrExpScale;
  using protocols::kLrReplyScale;
  using protocols::kLrSigmoidScale;
  using protocols::kLrUnblindDigits;
  const BigInt e = PlainPowerConversion(PlainPow(theta, x), b1,
                                        kLrReplyScale, kLrUnblindDigits);
  const BigInt den = (e + Pow10(kLrExpScale)) * b2;
  const int den_scale = kLrExpScale + encoding::kBlindScale;
  const BigInt shift =
      Pow10(kLrSigmoidScale + den_scale - kProtocolScale);
  const int update_scale = kLrExpScale + kProtocolScale;
  std::vector<BigInt> out;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const BigInt g = TruncDiv(x[j] * shift, den) * b2;
    const BigInt t = theta[j] * Pow10(kLrExpScale) - lambda * g +
                     lambda * x[j] * y * Pow10(update_scale - 2 * kProtocolScale);
    out.push_back(encoding::Truncate(t, update_scale, kProtocolScale));
  }
  return out;
}

std::vector<std::vector<BigInt>> QuantizedLrTrace(const data::Dataset& d,
                                                  const TrainConfig& cfg) {
  const BigInt lam = encoding::FxEncode(cfg.lambda, kProtocolScale);
  Rng exp_blind = protocols::Stream(cfg.seed, protocols::kStreamExpBlind);
  std::vector<BigInt> theta = cfg.InitialTheta(d.dim() + 1);
  std::vector<std::vector<BigInt>> trace;
  for (std::size_t t :
       protocols::SampleSchedule(cfg.seed, cfg.max_iters, d.size())) {
    const BigInt b1 =
        encoding::BlindFactor(blocks::DrawBlindExponent(exp_blind));
    const BigInt b2 =
        encoding::BlindFactor(blocks::DrawBlindExponent(exp_blind));
    theta = QuantizedLrStep(theta, protocols::QuantizeRecord(d.x[t]),
                            d.labels[t], lam, b1, b2);
    trace.push_back(theta);
  }
  return trace;
}

std::vector<std::vector<double>> ExactLrTrace(const data::Dataset& d,
                                              const TrainConfig& cfg) {
  std::vector<double> theta = InitialValues(cfg, d.dim() + 1);
  std::vector<std::vector<double>> trace;
  for (std::size_t t :
       protocols::SampleSchedule(cfg.seed, cfg.max_iters, d.size())) {
    const std::vector<double> x = WithBias(d.x[t]);
    const double sigma = 1.0 / (1.0 + std::exp(-Dot(theta, x)));
    for (std::size_t j = 0; j < x.size(); ++j) {
      theta[j] -= cfg.lambda * x[j] * (sigma - d.labels[t]);
    }
    trace.push_back(theta);
  }
  return trace;
}

protocols::NbModel PlainNb(const data::Dataset& d,
                           const data::DatasetSchema& schema, bool smoothing) {
  return protocols::ModelFromStats(protocols::LocalNbStats(d, schema), schema,
                                   smoothing);
}

GaussianCheck Gaussian(const std::vector<double>& values) {
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no values");
  }
  const double n = static_cast<double>(values.size());
  double sum = 0;
  double sum_sq = 0;
  for (double v : values) {
    sum += v;
    sum_sq += v * v;
  }
  GaussianCheck g;
  g.mu = sum / n;
  for (double v : values) g.var_direct += (v - g.mu) * (v - g.mu);
  g.var_direct /= n;
  g.var_expanded = sum_sq / n - 2 * g.mu * sum / n + g.mu * g.mu;
  return g;
}

double LogLoss(const std::vector<double>& theta, const data::Dataset& d) {
  double loss = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double z = Dot(theta, WithBias(d.x[i]));
    // log(1 + e^z) - y z, computed stably.
    const double softplus = z > 0 ? z + std::log1p(std::exp(-z))
                                  : std::log1p(std::exp(z));
    loss += softplus - d.labels[i] * z;
  }
  return loss / static_cast<double>(d.size());
}

BigInt PaillierEncryptDirect(const BigInt& n, const BigInt& m,
                             const BigInt& r) {
  const BigInt n2 = n * n;
  return Mod(PowMod(n + 1, m, n2) * PowMod(r, n, n2), n2);
}

BigInt PaillierDecryptDirect(const BigInt& n, const BigInt& phi,
                             const BigInt& c) {
  const BigInt n2 = n * n;
  const BigInt l = (PowMod(c, phi, n2) - 1) / n;
  return Mod(l * ModInverse(phi, n), n);
}

BigInt RsaPowNaive(const BigInt& m, unsigned long e, const BigInt& n) {
  BigInt acc = 1;
  for (unsigned long i = 0; i < e; ++i) acc = Mod(acc * m, n);
  return acc;
}

}  // namespace pheml::oracle
