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

// Per-dataset ranking of classifier results.
//
// Within each dataset row the best classifier receives rank k and the
// worst rank 1; tied values share the average of their ranks.

#ifndef IDSBENCH_STATS_RANKING_H_
#define IDSBENCH_STATS_RANKING_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace idsbench::stats {

enum class Direction { kHigherBetter, kLowerBetter };

absl::string_view DirectionName(Direction direction);

// d x k results: values[i][j] is classifier j on dataset i.
struct ResultsMatrix {
  std::vector<std::string> datasets;
  std::vector<std::string> classifiers;
  std::vector<std::vector<double>> values;
  Direction direction = Direction::kHigherBetter;

  size_t d() const { return datasets.size(); }
  size_t k() const { return classifiers.size(); }

  // Requires d >= 2, k >= 2, matching shapes and finite values.
  absl::Status Validate() const;
};

struct RankMatrix {
  std::vector<std::vector<double>> ranks;
  std::vector<double> rank_sums;
  std::vector<double> mean_ranks;

  size_t d() const { return ranks.size(); }
  size_t k() const { return rank_sums.size(); }
};

// Ranks of one row, best = row.size().
std::vector<double> RankRow(std::span<const double> row, Direction direction);

absl::StatusOr<RankMatrix> RankRows(const ResultsMatrix& results);

}  // namespace idsbench::stats

#endif  // IDSBENCH_STATS_RANKING_H_
