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

#include "idsbench/stats/nemenyi.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "idsbench/stats/distributions.h"

namespace idsbench::stats {

double NemenyiGamma(double mean_rank_x, double mean_rank_y, size_t k, size_t d) {
  const double kk = static_cast<double>(k);
  const double se = std::sqrt(kk * (kk + 1.0) / (6.0 * static_cast<double>(d)));
  return std::abs(mean_rank_x - mean_rank_y) / se;
}

double NemenyiAdjustedP(double gamma, size_t k) {
  const double comparisons = static_cast<double>(k * (k - 1)) / 2.0;
  return std::min(1.0, comparisons * 2.0 * NormalSurvival(gamma));
}

absl::StatusOr<NemenyiResult> Nemenyi(std::span<const double> mean_ranks,
                                      size_t d, std::span<const double> alphas) {
  const size_t k = mean_ranks.size();
  if (d < 1 || k < 2) {
    return absl::InvalidArgumentError(absl::StrCat(
        "Nemenyi test needs d >= 1 and k >= 2, got d=", d, " k=", k));
  }
  NemenyiResult result;
  for (size_t x = 0; x < k; ++x) {
    for (size_t y = x + 1; y < k; ++y) {
      NemenyiPair pair;
      pair.x = x;
      pair.y = y;
      pair.gamma = NemenyiGamma(mean_ranks[x], mean_ranks[y], k, d);
      pair.p_adjusted = NemenyiAdjustedP(pair.gamma, k);
      pair.decisions = Decide(pair.p_adjusted, alphas);
      result.pairs.push_back(std::move(pair));
    }
  }
  return result;
}

}  // namespace idsbench::stats
