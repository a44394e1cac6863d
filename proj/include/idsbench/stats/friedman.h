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

// Friedman test on the ranks of k classifiers over d datasets.
//
//   Q = 12 / (d k (k + 1)) * sum_j (R_j - d (k + 1) / 2)^2
//   F = (d - 1) Q / (d (k - 1) - Q)
//
// with R_j the rank sum of classifier j. The p-value is the upper tail of
// the F distribution with k - 1 and (d - 1)(k - 1) degrees of freedom.

#ifndef IDSBENCH_STATS_FRIEDMAN_H_
#define IDSBENCH_STATS_FRIEDMAN_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "idsbench/stats/ranking.h"

namespace idsbench::stats {

enum class Decision { kReject, kAccept };

// "R" or "A".
absl::string_view DecisionMark(Decision decision);

struct AlphaDecision {
  double alpha = 0.05;
  Decision decision = Decision::kAccept;
};

inline constexpr double kDefaultAlphas[] = {0.05, 0.1};

// Reject iff p < alpha, for each alpha in order.
std::vector<AlphaDecision> Decide(double p_value, std::span<const double> alphas);

struct FriedmanResult {
  size_t d = 0;
  size_t k = 0;
  double q = 0.0;
  double f_statistic = 0.0;
  double df1 = 0.0;
  double df2 = 0.0;
  double p_value = 1.0;
  std::vector<AlphaDecision> decisions;
};

// Q from rank sums over d datasets.
double FriedmanQ(std::span<const double> rank_sums, size_t d);

// Errors: DegenerateStatistic when d (k - 1) = Q, and InvalidArgument for
// d < 2 or k < 2.
absl::StatusOr<FriedmanResult> FriedmanFromMeanRanks(
    std::span<const double> mean_ranks, size_t d,
    std::span<const double> alphas = kDefaultAlphas);

absl::StatusOr<FriedmanResult> Friedman(
    const RankMatrix& ranks, std::span<const double> alphas = kDefaultAlphas);

}  // namespace idsbench::stats

#endif  // IDSBENCH_STATS_FRIEDMAN_H_
