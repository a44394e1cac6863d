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

#include "idsbench/stats/friedman.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "idsbench/stats/distributions.h"

namespace idsbench::stats {

absl::string_view DecisionMark(Decision decision) {
  return decision == Decision::kReject ? "R" : "A";
}

std::vector<AlphaDecision> Decide(double p_value, std::span<const double> alphas) {
  std::vector<AlphaDecision> out;
  for (const double alpha : alphas) {
    out.push_back({alpha, p_value < alpha ? Decision::kReject : Decision::kAccept});
  }
  return out;
}

double FriedmanQ(std::span<const double> rank_sums, size_t d) {
  const double dd = static_cast<double>(d);
  const double k = static_cast<double>(rank_sums.size());
  const double center = dd * (k + 1.0) / 2.0;
  double sum = 0.0;
  for (const double r : rank_sums) sum += (r - center) * (r - center);
  return 12.0 / (dd * k * (k + 1.0)) * sum;
}

absl::StatusOr<FriedmanResult> FriedmanFromMeanRanks(
    std::span<const double> mean_ranks, size_t d, std::span<const double> alphas) {
  if (d < 2 || mean_ranks.size() < 2) {
    return absl::InvalidArgumentError(absl::StrCat(
        "Friedman test needs d >= 2 and k >= 2, got d=", d,
        " k=", mean_ranks.size()));
  }
  std::vector<double> rank_sums;
  for (const double r : mean_ranks) rank_sums.push_back(r * static_cast<double>(d));
  FriedmanResult result;
  result.d = d;
  result.k = mean_ranks.size();
  const double dd = static_cast<double>(d);
  const double k = static_cast<double>(result.k);
  result.q = FriedmanQ(rank_sums, d);
  const double denominator = dd * (k - 1.0) - result.q;
  // Complete agreement between datasets gives Q = d(k-1) up to rounding.
  if (std::abs(denominator) <= 1e-12 * dd * (k - 1.0)) {
    return absl::FailedPreconditionError(absl::StrCat(
        "DegenerateStatistic: d(k-1) equals Q = ", result.q));
  }
  result.f_statistic = (dd - 1.0) * result.q / denominator;
  result.df1 = k - 1.0;
  result.df2 = (dd - 1.0) * (k - 1.0);
  result.p_value = FSurvival(result.f_statistic, result.df1, result.df2);
  result.decisions = Decide(result.p_value, alphas);
  return result;
}

absl::StatusOr<FriedmanResult> Friedman(const RankMatrix& ranks,
                                        std::span<const double> alphas) {
  return FriedmanFromMeanRanks(ranks.mean_ranks, ranks.d(), alphas);
}

}  // namespace idsbench::stats
