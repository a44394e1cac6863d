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

#include "idsbench/eval/report.h"

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "idsbench/utils/csv.h"
#include "idsbench/utils/status_macros.h"

namespace idsbench::eval {

std::string FormatMetric(std::optional<double> value) {
  return value ? utils::FormatDouble(*value) : std::string(kUndefined);
}

absl::StatusOr<std::optional<double>> ParseMetricValue(absl::string_view text) {
  if (text == kUndefined) return std::optional<double>();
  double v;
  if (!absl::SimpleAtod(text, &v)) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad metric value '", text, "'"));
  }
  return std::optional<double>(v);
}

std::string ReportCsvHeader() {
  return utils::CsvLine({"dataset", "classifier", "round", "repeat", "accuracy",
                         "specificity", "sensitivity", "fpr", "auc", "mbt_s",
                         "resp_s"});
}

std::string ReportCsvRows(const ValidationReport& report, bool include_timing) {
  std::string out;
  for (const RoundResult& r : report.rounds) {
    const MetricSet& m = r.metrics;
    out += utils::CsvLine(
        {report.dataset, report.classifier, absl::StrCat(r.round),
         absl::StrCat(r.repeat), FormatMetric(m.accuracy),
         FormatMetric(m.specificity), FormatMetric(m.sensitivity),
         FormatMetric(m.fpr), FormatMetric(m.auc),
         include_timing ? utils::FormatDouble(m.mbt_seconds) : "",
         include_timing ? utils::FormatDouble(m.avg_response_seconds) : ""});
  }
  return out;
}

std::string ReportToCsv(const ValidationReport& report, bool include_timing) {
  return ReportCsvHeader() + ReportCsvRows(report, include_timing);
}

nlohmann::json MetricSetToJson(const MetricSet& m, bool include_timing) {
  nlohmann::json json = nlohmann::json::object();
  for (const Metric metric : kQualityMetrics) {
    const std::optional<double> v = m.Get(metric);
    json[std::string(MetricName(metric))] =
        v ? nlohmann::json(*v) : nlohmann::json(kUndefined);
  }
  if (include_timing) {
    json["mbt_s"] = m.mbt_seconds;
    json["resp_s"] = m.avg_response_seconds;
  }
  return json;
}

absl::StatusOr<MetricSet> MetricSetFromJson(const nlohmann::json& json) {
  MetricSet m;
  try {
    for (const Metric metric : kQualityMetrics) {
      const nlohmann::json& v = json.at(std::string(MetricName(metric)));
      if (v.is_number()) {
        m.Set(metric, v.get<double>());
      } else if (v != nlohmann::json(kUndefined)) {
        return absl::InvalidArgumentError(
            absl::StrCat("bad value for ", MetricName(metric)));
      }
    }
    if (json.contains("mbt_s")) m.mbt_seconds = json["mbt_s"].get<double>();
    if (json.contains("resp_s")) {
      m.avg_response_seconds = json["resp_s"].get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed metric set: ", e.what()));
  }
  return m;
}

nlohmann::json SplitPlanToJson(const data::SplitPlan& plan) {
  return {{"kind", plan.kind == data::SplitPlan::Kind::kHoldout ? "holdout"
                                                                 : "kfold"},
          {"train_fraction", plan.train_fraction},
          {"k", plan.k},
          {"seed", plan.seed},
          {"rounds", plan.rounds},
          {"repeats", plan.repeats},
          {"stratified", plan.stratified}};
}

absl::StatusOr<data::SplitPlan> SplitPlanFromJson(const nlohmann::json& json) {
  data::SplitPlan plan;
  try {
    const std::string kind = json.at("kind").get<std::string>();
    if (kind == "holdout") {
      plan.kind = data::SplitPlan::Kind::kHoldout;
    } else if (kind == "kfold") {
      plan.kind = data::SplitPlan::Kind::kKFold;
    } else {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown split kind '", kind, "'"));
    }
    plan.train_fraction = json.at("train_fraction").get<double>();
    plan.k = json.at("k").get<int>();
    plan.seed = json.at("seed").get<uint64_t>();
    plan.rounds = json.at("rounds").get<int>();
    plan.repeats = json.at("repeats").get<int>();
    plan.stratified = json.at("stratified").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed split plan: ", e.what()));
  }
  RETURN_IF_ERROR(plan.Validate());
  return plan;
}

nlohmann::json ReportToJson(const ValidationReport& report, bool include_timing) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const RoundResult& r : report.rounds) {
    rounds.push_back({{"repeat", r.repeat},
                      {"round", r.round},
                      {"metrics", MetricSetToJson(r.metrics, include_timing)}});
  }
  nlohmann::json repeat_means = nlohmann::json::array();
  for (const MetricSet& m : report.repeat_means) {
    repeat_means.push_back(MetricSetToJson(m, include_timing));
  }
  return {{"dataset", report.dataset},
          {"classifier", report.classifier},
          {"params", report.params},
          {"plan", SplitPlanToJson(report.plan)},
          {"rounds", std::move(rounds)},
          {"repeat_means", std::move(repeat_means)},
          {"mean", MetricSetToJson(report.mean, include_timing)}};
}

absl::StatusOr<ValidationReport> ReportFromJson(const nlohmann::json& json) {
  ValidationReport report;
  try {
    report.dataset = json.at("dataset").get<std::string>();
    report.classifier = json.at("classifier").get<std::string>();
    report.params = json.at("params");
    ASSIGN_OR_RETURN(report.plan, SplitPlanFromJson(json.at("plan")));
    for (const nlohmann::json& r : json.at("rounds")) {
      RoundResult round;
      round.repeat = r.at("repeat").get<int>();
      round.round = r.at("round").get<int>();
      ASSIGN_OR_RETURN(round.metrics, MetricSetFromJson(r.at("metrics")));
      report.rounds.push_back(round);
    }
    for (const nlohmann::json& m : json.at("repeat_means")) {
      ASSIGN_OR_RETURN(MetricSet set, MetricSetFromJson(m));
      report.repeat_means.push_back(set);
    }
    ASSIGN_OR_RETURN(report.mean, MetricSetFromJson(json.at("mean")));
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed validation report: ", e.what()));
  }
  return report;
}

}  // namespace idsbench::eval
