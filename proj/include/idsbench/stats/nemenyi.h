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

// Nemenyi post-hoc comparison of all classifier pairs.
//
//   gamma_xy = |R_x - R_y| / sqrt(k (k + 1) / (6 d))
//
// on mean ranks, with the two-sided normal tail Bonferroni-adjusted over
// the k (k - 1) / 2 comparisons:
//
//   p = min(1, k (k - 1) / 2 * 2 (1 - Phi(gamma)))

#ifndef IDSBENCH_STATS_NEMENYI_H_
#define IDSBENCH_STATS_NEMENYI_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "idsbench/stats/friedman.h"

namespace idsbench::stats {

struct NemenyiPair {
  // Classifier indices, x < y.
  size_t x = 0;
  size_t y = 0;
  double gamma = 0.0;
  double p_adjusted = 1.0;
  std::vector<AlphaDecision> decisions;
};

struct NemenyiResult {
  // (0,1), (0,2), ..., (k-2,k-1).
  std::vector<NemenyiPair> pairs;
};

double NemenyiGamma(double mean_rank_x, double mean_rank_y, size_t k, size_t d);
double NemenyiAdjustedP(double gamma, size_t k);

// Errors: InvalidArgument for d < 1 or k < 2.
absl::StatusOr<NemenyiResult> Nemenyi(
    std::span<const double> mean_ranks, size_t d,
    std::span<const double> alphas = kDefaultAlphas);

}  // namespace idsbench::stats

#endif  // IDSBENCH_STATS_NEMENYI_H_
