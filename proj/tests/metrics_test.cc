/*
 * Copyright 2026 The idsbench Authors.
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

#include "gtest/gtest.h"
#include "idsbench/eval/metrics.h"
#include "idsbench/utils/random.h"

namespace idsbench::eval {
namespace {

// Pair-counting oracle: twice the number of winning pairs plus ties, over
// twice the number of pairs.
double PairCountAuc(const std::vector<double>& s, const std::vector<uint8_t>& y) {
  int64_t count2 = 0, pos = 0, neg = 0;
  for (size_t i = 0; i < s.size(); ++i) (y[i] ? pos : neg)++;
  for (size_t i = 0; i < s.size(); ++i) {
    if (!y[i]) continue;
    for (size_t j = 0; j < s.size(); ++j) {
      if (y[j]) continue;
      count2 += s[i] > s[j] ? 2 : (s[i] == s[j] ? 1 : 0);
    }
  }
  return static_cast<double>(count2) / static_cast<double>(2 * pos * neg);
}

TEST(ConfusionTest, CountsAndErrors) {
  const std::vector<uint8_t> pred = {1, 1, 0, 0, 1};
  const std::vector<uint8_t> truth = {1, 0, 0, 1, 1};
  const auto cm = Confusion(pred, truth);
  ASSERT_TRUE(cm.ok());
  EXPECT_EQ(*cm, (ConfusionMatrix{2, 1, 1, 1}));
  EXPECT_FALSE(Confusion(pred, std::vector<uint8_t>{1}).ok());
  EXPECT_FALSE(Confusion({}, {}).ok());
}

TEST(RatesTest, Definitions) {
  const ConfusionMatrix cm{8, 85, 5, 2};
  const Rates r = RatesFromConfusion(cm);
  EXPECT_DOUBLE_EQ(*r.accuracy, 0.93);
  EXPECT_DOUBLE_EQ(*r.specificity, 85.0 / 90.0);
  EXPECT_DOUBLE_EQ(*r.sensitivity, 0.8);
  EXPECT_DOUBLE_EQ(*r.fpr, 5.0 / 90.0);
}

TEST(RatesTest, UndefinedIsEmptyNotZero) {
  const ConfusionMatrix no_attacks{0, 10, 0, 0};
  const Rates r = RatesFromConfusion(no_attacks);
  EXPECT_FALSE(r.sensitivity.has_value());
  EXPECT_EQ(*r.specificity, 1.0);
  const auto exact = ExactRate(no_attacks, Metric::kSensitivity);
  ASSERT_FALSE(exact.ok());
  EXPECT_NE(exact.status().message().find("UndefinedMetric"), std::string::npos);
}

TEST(RatesTest, IdentitiesOnRandomMatrices) {
  utils::Rng rng(17);
  for (int trial = 0; trial < 10000; ++trial) {
    ConfusionMatrix cm{static_cast<int64_t>(utils::UniformIndex(rng, 1000)),
                       static_cast<int64_t>(utils::UniformIndex(rng, 1000)),
                       static_cast<int64_t>(utils::UniformIndex(rng, 1000)),
                       static_cast<int64_t>(utils::UniformIndex(rng, 1000))};
    if (cm.negatives() == 0 || cm.positives() == 0) continue;
    const Rates r = RatesFromConfusion(cm);
    ASSERT_EQ(*r.specificity + *r.fpr, 1.0);
    // acc * N = sens * P + spec * Neg: numerators and denominators add up.
    const auto acc = *ExactRate(cm, Metric::kAccuracy);
    const auto sens = *ExactRate(cm, Metric::kSensitivity);
    const auto spec = *ExactRate(cm, Metric::kSpecificity);
    ASSERT_EQ(acc.numerator, sens.numerator + spec.numerator);
    ASSERT_EQ(acc.denominator, sens.denominator + spec.denominator);
  }
}

TEST(AucTest, KnownValues) {
  EXPECT_EQ(*Auc(std::vector<double>{0.9, 0.8, 0.3, 0.1},
                 std::vector<uint8_t>{1, 1, 0, 0}),
            1.0);
  EXPECT_EQ(*Auc(std::vector<double>{0.5, 0.5}, std::vector<uint8_t>{1, 0}), 0.5);
  EXPECT_DOUBLE_EQ(*Auc(std::vector<double>{0.9, 0.4, 0.6, 0.1},
                        std::vector<uint8_t>{1, 1, 0, 0}),
                   0.75);
  EXPECT_FALSE(Auc(std::vector<double>{0.1, 0.2}, std::vector<uint8_t>{1, 1}).ok());
  EXPECT_FALSE(Auc(std::vector<double>{std::nan(""), 0.2},
                   std::vector<uint8_t>{1, 0})
                   .ok());
}

TEST(AucTest, MatchesPairCountingOracle) {
  utils::Rng rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const size_t n = 2 + utils::UniformIndex(rng, 199);
    const uint64_t levels = 1 + utils::UniformIndex(rng, 20);
    std::vector<double> s(n);
    std::vector<uint8_t> y(n);
    for (size_t i = 0; i < n; ++i) {
      s[i] = static_cast<double>(utils::UniformIndex(rng, levels)) / levels;
      y[i] = static_cast<uint8_t>(utils::UniformIndex(rng, 2));
    }
    y[0] = 1;
    y[1] = 0;
    ASSERT_EQ(*Auc(s, y), PairCountAuc(s, y)) << "trial " << trial;
  }
}

TEST(RocTest, CurveAndTrapezoidAgreeWithAuc) {
  const std::vector<double> s = {0.9, 0.7, 0.7, 0.4, 0.2, 0.2};
  const std::vector<uint8_t> y = {1, 0, 1, 1, 0, 0};
  const auto curve = RocCurve(s, y);
  ASSERT_TRUE(curve.ok());
  EXPECT_TRUE(std::isinf(curve->front().threshold));
  EXPECT_EQ(curve->front().fpr, 0.0);
  EXPECT_EQ(curve->back().tpr, 1.0);
  EXPECT_EQ(curve->size(), 5u);
  EXPECT_DOUBLE_EQ(TrapezoidArea(*curve), *Auc(s, y));
}

TEST(MetricNamesTest, ParseAndDirection) {
  for (const Metric m : kQualityMetrics) EXPECT_EQ(*ParseMetric(MetricName(m)), m);
  EXPECT_EQ(*ParseMetric("mbt"), Metric::kMbt);
  EXPECT_EQ(*ParseMetric("resp"), Metric::kResponseTime);
  EXPECT_FALSE(ParseMetric("precision").ok());
  EXPECT_TRUE(LowerIsBetter(Metric::kFpr));
  EXPECT_TRUE(LowerIsBetter(Metric::kMbt));
  EXPECT_FALSE(LowerIsBetter(Metric::kAuc));
}

TEST(MeanMetricSetTest, UndefinedPropagates) {
  MetricSet a, b;
  a.accuracy = 0.8;
  b.accuracy = 0.6;
  a.sensitivity = 0.5;
  a.mbt_seconds = 1.0;
  b.mbt_seconds = 3.0;
  const std::vector<MetricSet> sets = {a, b};
  const MetricSet mean = MeanMetricSet(sets);
  EXPECT_DOUBLE_EQ(*mean.accuracy, 0.7);
  EXPECT_FALSE(mean.sensitivity.has_value());
  EXPECT_EQ(mean.mbt_seconds, 2.0);
  EXPECT_FALSE(MeanMetricSet({}).accuracy.has_value());
}

}  // namespace
}  // namespace idsbench::eval
