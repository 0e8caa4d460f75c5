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
#include <gtest/gtest.h>

#include <cmath>

#include "pheml/oracle/plain.h"
#include "pheml/protocols/train.h"
#include "test_util.h"

namespace pheml::oracle {
namespace {

using pheml::testing::Synthetic;

TEST(Gaussian, DirectAndExpandedAgree) {
  const GaussianCheck g = Gaussian({0.2, 0.4, 0.6});
  EXPECT_NEAR(g.mu, 0.4, 1e-15);
  EXPECT_NEAR(g.var_direct, 0.0266666666666667, 1e-12);
  EXPECT_NEAR(g.var_expanded, g.var_direct, 1e-15);
}

TEST(PlainNb, SingleClassPrior) {
  data::Dataset d = Synthetic(10, 2, 1);
  std::fill(d.labels.begin(), d.labels.end(), 1);
  const protocols::NbModel m = PlainNb(d, pheml::testing::NumericSchema(2), false);
  EXPECT_DOUBLE_EQ(m.priors[1], 1.0);
  EXPECT_DOUBLE_EQ(m.priors[0], 0.0);
}

TEST(PlainSvm, InactiveHingeKeepsModel) {
  data::Dataset d;
  d.x.push_back({});
  d.category.push_back({});
  d.labels.push_back(1);
  protocols::TrainConfig cfg;
  cfg.max_iters = 3;
  cfg.initial_theta = {300};
  for (const auto& t : QuantizedSvmTrace(d, cfg)) {
    EXPECT_EQ(t, std::vector<BigInt>{300});
  }
  for (const auto& t : ExactSvmTrace(d, cfg)) EXPECT_DOUBLE_EQ(t[0], 3.0);
}

TEST(PlainSvm, QuantizedTracksExact) {
  const data::Dataset d = Synthetic(40, 4, 2);
  protocols::TrainConfig cfg;
  cfg.max_iters = 200;
  const auto q = QuantizedSvmTrace(d, cfg);
  const auto e = ExactSvmTrace(d, cfg);
  ASSERT_EQ(q.size(), e.size());
  for (std::size_t j = 0; j < q.back().size(); ++j) {
    EXPECT_NEAR(encoding::FxDecode(q.back()[j], 2), e.back()[j], 0.5);
  }
}

TEST(PlainLr, QuantizedTracksExactAndLossFalls) {
  const data::Dataset d = Synthetic(40, 3, 5);
  protocols::TrainConfig cfg;
  cfg.max_iters = 150;
  cfg.lambda = 0.5;
  const auto q = QuantizedLrTrace(d, cfg);
  const auto e = ExactLrTrace(d, cfg);
  // Per-step truncation drifts the coefficients, not the fit.
  std::vector<double> qv;
  for (const BigInt& t : q.back()) qv.push_back(encoding::FxDecode(t, 2));
  const std::vector<double> zero(4, 0.0);
  EXPECT_LT(LogLoss(e.back(), d), 0.7 * LogLoss(zero, d));
  EXPECT_NEAR(LogLoss(qv, d), LogLoss(e.back(), d), 0.05);
  EXPECT_NEAR(LogLoss(zero, d), std::log(2.0), 1e-12);
}

TEST(PlainPow, ProductsAndScales) {
  const PowComponents p = PlainPow({-131, -242}, {10, 20});
  EXPECT_EQ(p.int_part, 1637240);
  EXPECT_EQ(p.int_scale, 6);
  EXPECT_EQ(p.frac_scale, 146);
  const PowComponents n = PlainPow({50}, {10});
  BigInt expect;
  mpz_pow_ui(expect.get_mpz_t(), BigInt(90).get_mpz_t(), 50);
  EXPECT_EQ(n.int_part, 1);
  EXPECT_EQ(n.frac_part, expect);
  EXPECT_EQ(n.frac_scale, 100);
}

}  // namespace
}  // namespace pheml::oracle
