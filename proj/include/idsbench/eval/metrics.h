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

// Binary detection metrics with attack as the positive class.
//
//   accuracy    = (TP + TN) / (TP + TN + FP + FN)
//   specificity = TN / (TN + FP)
//   sensitivity = TP / (TP + FN)
//   fpr         = FP / (TN + FP)
//
// A rate whose denominator is zero is undefined and represented as an
// empty optional, never as 0 or 1.

#ifndef IDSBENCH_EVAL_METRICS_H_
#define IDSBENCH_EVAL_METRICS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "idsbench/data/schema.h"

namespace idsbench::eval {

enum class Metric {
  kAccuracy,
  kSpecificity,
  kSensitivity,
  kFpr,
  kAuc,
  kMbt,
  kResponseTime,
};

inline constexpr Metric kQualityMetrics[] = {
    Metric::kAccuracy, Metric::kSpecificity, Metric::kSensitivity,
    Metric::kFpr, Metric::kAuc};

// accuracy, specificity, sensitivity, fpr, auc, mbt_s, resp_s.
absl::string_view MetricName(Metric metric);
absl::StatusOr<Metric> ParseMetric(absl::string_view name);

// True for metrics where smaller values are better (fpr and the timings).
bool LowerIsBetter(Metric metric);

struct ConfusionMatrix {
  int64_t tp = 0;
  int64_t tn = 0;
  int64_t fp = 0;
  int64_t fn = 0;

  int64_t total() const { return tp + tn + fp + fn; }
  int64_t positives() const { return tp + fn; }
  int64_t negatives() const { return tn + fp; }

  bool operator==(const ConfusionMatrix&) const = default;
};

// Errors: LengthMismatch, EmptyInput.
absl::StatusOr<ConfusionMatrix> Confusion(
    std::span<const data::BinaryLabel> predicted,
    std::span<const data::BinaryLabel> truth);

// Exact numerator / denominator of a rate.
struct Fraction {
  int64_t numerator = 0;
  int64_t denominator = 1;

  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
};

// One of the four confusion-matrix rates as an exact fraction. Fails with
// UndefinedMetric when the denominator is zero.
absl::StatusOr<Fraction> ExactRate(const ConfusionMatrix& cm, Metric metric);

struct Rates {
  std::optional<double> accuracy;
  std::optional<double> specificity;
  std::optional<double> sensitivity;
  std::optional<double> fpr;
};

Rates RatesFromConfusion(const ConfusionMatrix& cm);

// Area under the ROC curve: the fraction of (attack, normal) pairs in
// which the attack scores higher, tied pairs counting one half. Errors:
// LengthMismatch, SingleClassTruth, and InvalidArgument for NaN scores.
absl::StatusOr<double> Auc(std::span<const double> scores,
                           std::span<const data::BinaryLabel> truth);

struct RocPoint {
  double threshold = 0.0;
  double fpr = 0.0;
  double tpr = 0.0;
};

// ROC vertices from (0, 0) to (1, 1), one per distinct score taken in
// decreasing order; the first point has threshold +infinity.
absl::StatusOr<std::vector<RocPoint>> RocCurve(
    std::span<const double> scores, std::span<const data::BinaryLabel> truth);

// Trapezoidal area under a polyline of ROC points.
double TrapezoidArea(std::span<const RocPoint> curve);

// Quality metrics and timings of one evaluation.
struct MetricSet {
  std::optional<double> accuracy;
  std::optional<double> specificity;
  std::optional<double> sensitivity;
  std::optional<double> fpr;
  std::optional<double> auc;
  double mbt_seconds = 0.0;
  double avg_response_seconds = 0.0;

  std::optional<double> Get(Metric metric) const;
  void Set(Metric metric, std::optional<double> value);
};

// Field-wise arithmetic mean. A quality metric is undefined in the mean if
// it is undefined in any input. Empty input gives an all-undefined set.
MetricSet MeanMetricSet(std::span<const MetricSet> sets);

}  // namespace idsbench::eval

#endif  // IDSBENCH_EVAL_METRICS_H_
