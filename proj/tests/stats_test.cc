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
#include <numeric>

#include "gtest/gtest.h"
#include "idsbench/stats/distributions.h"
#include "idsbench/stats/friedman.h"
#include "idsbench/stats/nemenyi.h"
#include "idsbench/stats/ranking.h"
#include "idsbench/stats/stats_io.h"
#include "idsbench/utils/csv.h"
#include "idsbench/utils/random.h"
#include "test_util.h"

namespace idsbench::stats {
namespace {

ResultsMatrix RandomMatrix(size_t d, size_t k, utils::Rng& rng, int levels) {
  ResultsMatrix m;
  for (size_t i = 0; i < d; ++i) {
    m.datasets.push_back("d" + std::to_string(i));
    std::vector<double> row;
    for (size_t j = 0; j < k; ++j) {
      row.push_back(static_cast<double>(utils::UniformIndex(rng, levels)) / levels);
    }
    m.values.push_back(row);
  }
  for (size_t j = 0; j < k; ++j) m.classifiers.push_back("c" + std::to_string(j));
  return m;
}

// Reference values below come from scipy.special.betainc, scipy.stats.f and
// scipy.stats.norm.
TEST(DistributionsTest, IncompleteBeta) {
  EXPECT_NEAR(RegularizedIncompleteBeta(2.5, 3.5, 0.3), 0.29675298929566646, 1e-13);
  EXPECT_NEAR(RegularizedIncompleteBeta(0.5, 0.5, 0.9), 0.7951672353008665, 1e-13);
  EXPECT_NEAR(RegularizedIncompleteBeta(30, 40, 0.45), 0.6447480085585666, 1e-12);
  EXPECT_EQ(RegularizedIncompleteBeta(2, 3, 0.0), 0.0);
  EXPECT_EQ(RegularizedIncompleteBeta(2, 3, 1.0), 1.0);
}

TEST(DistributionsTest, FAndNormal) {
  EXPECT_NEAR(FSurvival(6.774545, 6, 18), 0.0006973125057929613, 1e-14);
  EXPECT_NEAR(FCdf(1.0, 3, 10), 0.567662796978303, 1e-13);
  EXPECT_NEAR(FSurvival(4.529412, 6, 18), 0.005744335743721535, 1e-13);
  EXPECT_EQ(FSurvival(0.0, 6, 18), 1.0);
  EXPECT_NEAR(NormalSurvival(1.96), 0.024997895148220435, 1e-15);
  EXPECT_NEAR(NormalCdf(-0.5), 0.3085375387259869, 1e-15);
}

TEST(RankingTest, BestGetsKAndTiesAverage) {
  EXPECT_EQ(RankRow(std::vector<double>{0.9, 0.7, 0.8}, Direction::kHigherBetter),
            (std::vector<double>{3, 1, 2}));
  EXPECT_EQ(RankRow(std::vector<double>{0.9, 0.7, 0.8}, Direction::kLowerBetter),
            (std::vector<double>{1, 3, 2}));
  EXPECT_EQ(RankRow(std::vector<double>{0.5, 0.5, 0.1, 0.5}, Direction::kHigherBetter),
            (std::vector<double>{3, 3, 1, 3}));
}

TEST(RankingTest, RankSumInvariantOnRandomMatrices) {
  utils::Rng rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const size_t d = 2 + utils::UniformIndex(rng, 10);
    const size_t k = 2 + utils::UniformIndex(rng, 9);
    ResultsMatrix m = RandomMatrix(d, k, rng, 1 + static_cast<int>(utils::UniformIndex(rng, 6)));
    if (utils::UniformIndex(rng, 2)) m.direction = Direction::kLowerBetter;
    const auto ranks = RankRows(m);
    ASSERT_TRUE(ranks.ok());
    const double total = std::accumulate(ranks->rank_sums.begin(), ranks->rank_sums.end(), 0.0);
    ASSERT_EQ(total, static_cast<double>(d * k * (k + 1)) / 2.0);
  }
}

TEST(RankingTest, ValidateShapes) {
  ResultsMatrix m;
  m.datasets = {"a"};
  m.classifiers = {"x", "y"};
  m.values = {{1, 2}};
  EXPECT_FALSE(m.Validate().ok());
  m.datasets = {"a", "b"};
  m.values = {{1, 2}, {1, std::nan("")}};
  EXPECT_FALSE(m.Validate().ok());
  m.values = {{1, 2}, {1, 3}};
  EXPECT_TRUE(m.Validate().ok());
}

TEST(FriedmanTest, MonotoneTransformInvariance) {
  utils::Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    ResultsMatrix m = RandomMatrix(4 + utils::UniformIndex(rng, 6), 3 + utils::UniformIndex(rng, 5),
                                   rng, 10);
    ResultsMatrix t = m;
    for (auto& row : t.values) {
      for (double& v : row) v = std::exp(3 * v) + 7;
    }
    const auto a = Friedman(*RankRows(m));
    const auto b = Friedman(*RankRows(t));
    ASSERT_EQ(a.ok(), b.ok());
    if (!a.ok()) continue;
    EXPECT_EQ(a->f_statistic, b->f_statistic);
    EXPECT_EQ(a->p_value, b->p_value);
  }
}

TEST(FriedmanTest, FromMeanRanksMatchesClosedForm) {
  const std::vector<double> ranks = {4.875, 2.25, 3.25, 1.25, 6.0, 5.75, 4.625};
  const auto r = FriedmanFromMeanRanks(ranks, 4);
  ASSERT_TRUE(r.ok());
  // Q = 12 d / (k (k+1)) * sum (R - 4)^2 with sum = 19.40625.
  EXPECT_DOUBLE_EQ(r->q, 12.0 * 4 / 56 * 19.40625);
  EXPECT_DOUBLE_EQ(r->f_statistic, 3 * r->q / (24 - r->q));
  EXPECT_EQ(r->df1, 6);
  EXPECT_EQ(r->df2, 18);
  EXPECT_EQ(r->decisions.size(), 2u);
  EXPECT_EQ(r->decisions[0].decision, Decision::kReject);
}

TEST(FriedmanTest, DegenerateAndInvalidInputs) {
  // Every dataset ranks identically: Q = d (k - 1).
  const auto r = FriedmanFromMeanRanks(std::vector<double>{1, 2, 3}, 5);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.status().message().find("DegenerateStatistic"), std::string::npos);
  EXPECT_FALSE(FriedmanFromMeanRanks(std::vector<double>{1, 2}, 1).ok());
  EXPECT_FALSE(FriedmanFromMeanRanks(std::vector<double>{1}, 3).ok());
}

TEST(DecideTest, StrictInequality) {
  const std::vector<double> alphas = {0.05, 0.1};
  const auto d = Decide(0.05, alphas);
  EXPECT_EQ(d[0].decision, Decision::kAccept);
  EXPECT_EQ(d[1].decision, Decision::kReject);
  EXPECT_EQ(DecisionMark(Decision::kReject), "R");
}

TEST(NemenyiTest, GammaAndAdjustedP) {
  // sqrt(7 * 8 / 24) = 1.5275...
  EXPECT_DOUBLE_EQ(NemenyiGamma(1.25, 6.0, 7, 4), 4.75 / std::sqrt(56.0 / 24.0));
  EXPECT_DOUBLE_EQ(NemenyiAdjustedP(3.0, 7), 21 * std::erfc(3.0 / std::sqrt(2.0)));
  EXPECT_EQ(NemenyiAdjustedP(1.0, 7), 1.0);
  EXPECT_EQ(NemenyiAdjustedP(0.1, 7), 1.0);
  const auto r = Nemenyi(std::vector<double>{1, 2, 3}, 10);
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r->pairs.size(), 3u);
  EXPECT_EQ(r->pairs[2].x, 1u);
  EXPECT_EQ(r->pairs[2].y, 2u);
}

TEST(StatsIoTest, MatrixCsvRoundTrip) {
  const auto text = utils::ReadFile(testing::TestDataPath("reference_stats/holdout_auc.csv"));
  ASSERT_TRUE(text.ok());
  const auto m = ParseResultsMatrixCsv(*text, Direction::kHigherBetter);
  ASSERT_TRUE(m.ok()) << m.status();
  EXPECT_EQ(m->d(), 4u);
  EXPECT_EQ(m->k(), 7u);
  EXPECT_EQ(ResultsMatrixToCsv(*m), *text);
  EXPECT_FALSE(ParseResultsMatrixCsv("dataset,a,b\nx,1\n", Direction::kHigherBetter).ok());
  EXPECT_FALSE(ParseResultsMatrixCsv("dataset,a,b\nx,1,z\ny,1,2\n",
                                     Direction::kHigherBetter)
                   .ok());
}

TEST(StatsIoTest, RankTestsAndTables) {
  const auto text = utils::ReadFile(testing::TestDataPath("reference_stats/holdout_accuracy.csv"));
  const auto m = ParseResultsMatrixCsv(*text, Direction::kHigherBetter);
  const std::vector<double> alphas = {0.05, 0.1};
  const auto report = RunRankTests(*m, "accuracy", alphas);
  ASSERT_TRUE(report.ok());
  ASSERT_TRUE(report->nemenyi.has_value());
  const std::string friedman = FriedmanTableCsv({&*report, 1});
  EXPECT_EQ(friedman.substr(0, friedman.find('\n')),
            "metric,f_statistic,p_value,alpha_0.05,alpha_0.1");
  const std::string nemenyi = NemenyiTableCsv({&*report, 1});
  EXPECT_EQ(std::count(nemenyi.begin(), nemenyi.end(), '\n'), 22);
  EXPECT_NE(nemenyi.find("accuracy,AB-XGB,"), std::string::npos);
  const nlohmann::json json = TestReportToJson(*report);
  EXPECT_EQ(json["nemenyi"].size(), 21u);
  EXPECT_EQ(json["direction"], "higher_better");
}

TEST(StatsIoTest, NoPostHocWhenFriedmanAccepts) {
  const auto text = utils::ReadFile(testing::TestDataPath("reference_stats/kfold_accuracy.csv"));
  const auto m = ParseResultsMatrixCsv(*text, Direction::kHigherBetter);
  const std::vector<double> alphas = {0.05, 0.1};
  const auto report = RunRankTests(*m, "accuracy", alphas);
  ASSERT_TRUE(report.ok());
  EXPECT_FALSE(report->nemenyi.has_value());
  EXPECT_TRUE(RunRankTests(*m, "accuracy", alphas, true)->nemenyi.has_value());
}

}  // namespace
}  // namespace idsbench::stats
