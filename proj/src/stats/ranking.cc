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

#include "idsbench/stats/ranking.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "idsbench/utils/status_macros.h"

namespace idsbench::stats {

absl::string_view DirectionName(Direction direction) {
  return direction == Direction::kHigherBetter ? "higher_better"
                                               : "lower_better";
}

absl::Status ResultsMatrix::Validate() const {
  if (d() < 2 || k() < 2) {
    return absl::InvalidArgumentError(absl::StrCat(
        "rank tests need at least 2 datasets and 2 classifiers, got ", d(),
        " x ", k()));
  }
  if (values.size() != d()) {
    return absl::InvalidArgumentError(absl::StrCat(
        values.size(), " value rows for ", d(), " datasets"));
  }
  for (size_t i = 0; i < d(); ++i) {
    if (values[i].size() != k()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "row ", datasets[i], " has ", values[i].size(), " values for ", k(),
          " classifiers"));
    }
    for (const double v : values[i]) {
      if (!std::isfinite(v)) {
        return absl::InvalidArgumentError(
            absl::StrCat("row ", datasets[i], " has a missing or non-finite value"));
      }
    }
  }
  return absl::OkStatus();
}

std::vector<double> RankRow(std::span<const double> row, Direction direction) {
  const size_t k = row.size();
  std::vector<size_t> order(k);
  std::iota(order.begin(), order.end(), size_t{0});
  // Worst first, so position p holds rank p + 1.
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return direction == Direction::kHigherBetter ? row[a] < row[b]
                                                 : row[a] > row[b];
  });
  std::vector<double> ranks(k);
  for (size_t p = 0; p < k;) {
    size_t q = p;
    while (q + 1 < k && row[order[q + 1]] == row[order[p]]) ++q;
    const double rank = (static_cast<double>(p + 1) + static_cast<double>(q + 1)) / 2.0;
    for (size_t i = p; i <= q; ++i) ranks[order[i]] = rank;
    p = q + 1;
  }
  return ranks;
}

absl::StatusOr<RankMatrix> RankRows(const ResultsMatrix& results) {
  RETURN_IF_ERROR(results.Validate());
  RankMatrix m;
  m.rank_sums.assign(results.k(), 0.0);
  for (const std::vector<double>& row : results.values) {
    m.ranks.push_back(RankRow(row, results.direction));
    for (size_t j = 0; j < results.k(); ++j) m.rank_sums[j] += m.ranks.back()[j];
  }
  for (const double sum : m.rank_sums) {
    m.mean_ranks.push_back(sum / static_cast<double>(results.d()));
  }
  return m;
}

}  // namespace idsbench::stats
