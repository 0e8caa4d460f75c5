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
#include <cmath>
#include <limits>

#include "pheml/blocks/interactive.h"
#include "pheml/common/error.h"
#include "pheml/protocols/train.h"

namespace pheml::protocols {
namespace {

constexpr char kFamilyClass[] = "nb-class-count";
constexpr char kFamilyDiscrete[] = "nb-discrete-count";
constexpr char kFamilySumX[] = "nb-sum-x";
constexpr char kFamilySumX2[] = "nb-sum-x2";

double Ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) return 0.0;
  mpq_class q(num, den);
  q.canonicalize();
  return q.get_d();
}

}  // namespace

NbLayout NbLayout::For(const data::DatasetSchema& schema) {
  NbLayout l;
  for (std::size_t j = 0; j < schema.features.size(); ++j) {
    const data::FeatureSpec& f = schema.features[j];
    if (f.kind == data::FeatureKind::kDiscrete) {
      l.discrete.push_back(j);
      l.offset.push_back(l.discrete_per_class);
      l.discrete_per_class += f.vocab.size();
    } else {
      l.numeric.push_back(j);
    }
  }
  return l;
}

NbStats LocalNbStats(const data::Dataset& d,
                     const data::DatasetSchema& schema) {
  const NbLayout l = NbLayout::For(schema);
  NbStats s;
  s.class_count.assign(kNbClasses, BigInt(0));
  s.discrete_count.assign(kNbClasses * l.discrete_per_class, BigInt(0));
  s.sum_x.assign(kNbClasses * l.numeric.size(), BigInt(0));
  s.sum_x2.assign(kNbClasses * l.numeric.size(), BigInt(0));
  for (std::size_t i = 0; i < d.size(); ++i) {
    const int c = d.labels[i];
    s.class_count[c] += 1;
    for (std::size_t k = 0; k < l.discrete.size(); ++k) {
      s.discrete_count[l.DiscreteIndex(c, k, d.category[i][l.discrete[k]])] +=
          1;
    }
    for (std::size_t k = 0; k < l.numeric.size(); ++k) {
      const BigInt x = encoding::FxEncode(d.x[i][l.numeric[k]],
                                          encoding::kProtocolScale);
      s.sum_x[l.NumericIndex(c, k)] += x;
      s.sum_x2[l.NumericIndex(c, k)] += x * x;
    }
  }
  return s;
}

NbModel ModelFromStats(const NbStats& s, const data::DatasetSchema& schema,
                       bool smoothing) {
  NbModel m;
  m.layout = NbLayout::For(schema);
  const NbLayout& l = m.layout;
  BigInt total = 0;
  for (const BigInt& c : s.class_count) total += c;
  m.m = total.get_ui();
  m.cond.resize(kNbClasses);
  m.mu.resize(kNbClasses);
  m.sigma_sq.resize(kNbClasses);
  for (int c = 0; c < kNbClasses; ++c) {
    const BigInt& n_c = s.class_count[c];
    m.priors.push_back(Ratio(n_c, total));
    for (std::size_t k = 0; k < l.discrete.size(); ++k) {
      const std::size_t vocab = schema.features[l.discrete[k]].vocab.size();
      std::vector<double> p;
      for (std::size_t v = 0; v < vocab; ++v) {
        const BigInt& cnt = s.discrete_count[l.DiscreteIndex(c, k, v)];
        p.push_back(smoothing ? Ratio(cnt + 1, n_c + vocab) : Ratio(cnt, n_c));
      }
      m.cond[c].push_back(std::move(p));
    }
    for (std::size_t k = 0; k < l.numeric.size(); ++k) {
      // mu = sum x / n, sigma^2 = sum x^2 / n - mu^2, evaluated exactly.
      const std::size_t idx = l.NumericIndex(c, k);
      double mu = 0;
      double var = 0;
      if (n_c > 0) {
        mpq_class mean(s.sum_x[idx], n_c * 100);
        mean.canonicalize();
        mpq_class sq(s.sum_x2[idx], n_c * 10000);
        sq.canonicalize();
        mu = mean.get_d();
        var = mpq_class(sq - mean * mean).get_d();
      }
      m.mu[c].push_back(mu);
      m.sigma_sq[c].push_back(std::max(var, kVarianceFloor));
    }
  }
  return m;
}

int NbPredict(const NbModel& model, const std::vector<double>& x,
              const std::vector<int>& category) {
  const NbLayout& l = model.layout;
  const double kNegInf = -std::numeric_limits<double>::infinity();
  std::vector<double> score(kNbClasses, 0.0);
  for (int c = 0; c < kNbClasses; ++c) {
    double s = model.priors[c] > 0 ? std::log(model.priors[c]) : kNegInf;
    for (std::size_t k = 0; k < l.discrete.size() && s > kNegInf; ++k) {
      const double p = model.cond[c][k][category[l.discrete[k]]];
      s += p > 0 ? std::log(p) : kNegInf;
    }
    for (std::size_t k = 0; k < l.numeric.size() && s > kNegInf; ++k) {
      const double v = encoding::FxDecode(
          encoding::FxEncode(x[l.numeric[k]], encoding::kProtocolScale),
          encoding::kProtocolScale);
      const double var = model.sigma_sq[c][k];
      const double diff = v - model.mu[c][k];
      s += -0.5 * std::log(2 * M_PI * var) - diff * diff / (2 * var);
    }
    score[c] = s;
  }
  if (score[0] == kNegInf && score[1] == kNegInf) {
    return model.priors[1] > model.priors[0] ? 1 : 0;
  }
  return score[1] > score[0] ? 1 : 0;
}

NbTrainResult NbTrain(Deployment& dep, const data::DatasetSchema& schema,
                      const TrainConfig& cfg) {
  for (int i = 1; i <= dep.n_owners(); ++i) {
    NbStats local = LocalNbStats(dep.shard(i), schema);
    blocks::Owner& o = dep.owner(i);
    o.SetSumSource(kFamilyClass, local.class_count);
    o.SetSumSource(kFamilyDiscrete, local.discrete_count);
    o.SetSumSource(kFamilySumX, local.sum_x);
    o.SetSumSource(kFamilySumX2, local.sum_x2);
  }
  blocks::DemanderContext& ctx = dep.demander();
  NbTrainResult res;
  res.stats.class_count = blocks::SecureSum(ctx, kFamilyClass);
  const NbLayout layout = NbLayout::For(schema);
  if (layout.discrete_per_class > 0) {
    res.stats.discrete_count = blocks::SecureSum(ctx, kFamilyDiscrete);
  }
  if (!layout.numeric.empty()) {
    res.stats.sum_x = blocks::SecureSum(ctx, kFamilySumX);
    res.stats.sum_x2 = blocks::SecureSum(ctx, kFamilySumX2);
  }
  res.model = ModelFromStats(res.stats, schema, cfg.nb_smoothing);
  return res;
}

}  // namespace pheml::protocols
