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

// Results-matrix CSV input and rank-test report output.
//
// A results matrix CSV has a header row "dataset,<classifier>,..." and one
// row per dataset: "<name>,<value>,...".

#ifndef IDSBENCH_STATS_STATS_IO_H_
#define IDSBENCH_STATS_STATS_IO_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "idsbench/stats/friedman.h"
#include "idsbench/stats/nemenyi.h"
#include "idsbench/stats/ranking.h"
#include "json.hpp"

namespace idsbench::stats {

absl::StatusOr<ResultsMatrix> ParseResultsMatrixCsv(absl::string_view text,
                                                    Direction direction);
std::string ResultsMatrixToCsv(const ResultsMatrix& m);

struct TestReport {
  std::string metric;
  ResultsMatrix results;
  RankMatrix ranks;
  FriedmanResult friedman;
  std::vector<double> alphas;
  // Present when the Friedman test rejects at some alpha, or always if
  // requested.
  std::optional<NemenyiResult> nemenyi;
};

absl::StatusOr<TestReport> RunRankTests(const ResultsMatrix& results,
                                        absl::string_view metric,
                                        std::span<const double> alphas,
                                        bool always_post_hoc = false);

// metric,f_statistic,p_value,alpha_<a>,... with one row per report.
std::string FriedmanTableCsv(std::span<const TestReport> reports);

// metric,pair,gamma,p_value,alpha_<a>,... for every report with a post-hoc
// section; pairs are named "<x>-<y>".
std::string NemenyiTableCsv(std::span<const TestReport> reports);

// metric,<classifier>,... with the mean ranks of each report. All reports
// must share the classifier order of the first.
std::string MeanRanksCsv(std::span<const TestReport> reports);

nlohmann::json TestReportToJson(const TestReport& report);

}  // namespace idsbench::stats

#endif  // IDSBENCH_STATS_STATS_IO_H_
