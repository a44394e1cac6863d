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

// Serialization of validation reports.
//
// The CSV has one row per round with the columns
//   dataset,classifier,round,repeat,accuracy,specificity,sensitivity,fpr,auc,mbt_s,resp_s
// Undefined metrics are written as "undefined". With timing disabled the
// timing cells are left empty so that reruns compare byte for byte.

#ifndef IDSBENCH_EVAL_REPORT_H_
#define IDSBENCH_EVAL_REPORT_H_

#include <optional>
#include <string>

#include "absl/status/statusor.h"
#include "idsbench/eval/validation.h"
#include "json.hpp"

namespace idsbench::eval {

inline constexpr absl::string_view kUndefined = "undefined";

std::string ReportCsvHeader();
std::string ReportCsvRows(const ValidationReport& report, bool include_timing);
std::string ReportToCsv(const ValidationReport& report, bool include_timing);

// Number or "undefined".
std::string FormatMetric(std::optional<double> value);
absl::StatusOr<std::optional<double>> ParseMetricValue(absl::string_view text);

nlohmann::json MetricSetToJson(const MetricSet& m, bool include_timing);
absl::StatusOr<MetricSet> MetricSetFromJson(const nlohmann::json& json);

nlohmann::json SplitPlanToJson(const data::SplitPlan& plan);
absl::StatusOr<data::SplitPlan> SplitPlanFromJson(const nlohmann::json& json);

// {"dataset", "classifier", "params", "plan", "rounds", "repeat_means",
//  "mean"}.
nlohmann::json ReportToJson(const ValidationReport& report, bool include_timing);
absl::StatusOr<ValidationReport> ReportFromJson(const nlohmann::json& json);

}  // namespace idsbench::eval

#endif  // IDSBENCH_EVAL_REPORT_H_
