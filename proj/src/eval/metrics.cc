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

#include "idsbench/eval/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"

namespace idsbench::eval {
namespace {

struct MetricInfo {
  Metric metric;
  absl::string_view name;
  bool lower_is_better;
};

constexpr MetricInfo kMetricInfo[] = {
    {Metric::kAccuracy, "accuracy", false},
    {Metric::kSpecificity, "specificity", false},
    {Metric::kSensitivity, "sensitivity", false},
    {Metric::kFpr, "fpr", true},
    {Metric::kAuc, "auc", false},
    {Metric::kMbt, "mbt_s", true},
    {Metric::kResponseTime, "resp_s", true},
};

const MetricInfo& Info(Metric metric) {
  return kMetricInfo[static_cast<int>(metric)];
}

absl::Status CheckLengths(size_t a, size_t b) {
  if (a != b) {
    return absl::InvalidArgumentError(
        absl::StrCat("LengthMismatch: ", a, " values vs ", b, " labels"));
  }
  if (a == 0) return absl::InvalidArgumentError("EmptyInput: no instances");
  return absl::OkStatus();
}

// Indices ordered by decreasing score, after validating the inputs.
absl::StatusOr<std::vector<size_t>> RankByScore(
    std::span<const double> scores, std::span<const data::BinaryLabel> truth,
    int64_t* positives, int64_t* negatives) {
  if (absl::Status s = CheckLengths(scores.size(), truth.size()); !s.ok()) {
    return s;
  }
  *positives = 0;
  for (size_t i = 0; i < scores.size(); ++i) {
    if (std::isnan(scores[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("score ", i, " is NaN"));
    }
    if (truth[i] == data::kAttack) ++*positives;
  }
  *negatives = static_cast<int64_t>(truth.size()) - *positives;
  if (*positives == 0 || *negatives == 0) {
    return absl::InvalidArgumentError(
        "SingleClassTruth: AUC needs both attack and normal instances");
  }
  std::vector<size_t> order(scores.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return scores[a] > scores[b]; });
  return order;
}

}  // namespace

absl::string_view MetricName(Metric metric) { return Info(metric).name; }

absl::StatusOr<Metric> ParseMetric(absl::string_view name) {
  const std::string lower = absl::AsciiStrToLower(absl::StripAsciiWhitespace(name));
  for (const MetricInfo& info : kMetricInfo) {
    if (lower == info.name) return info.metric;
  }
  if (lower == "mbt") return Metric::kMbt;
  if (lower == "resp" || lower == "response_time") return Metric::kResponseTime;
  return absl::InvalidArgumentError(absl::StrCat("unknown metric '", name, "'"));
}

bool LowerIsBetter(Metric metric) { return Info(metric).lower_is_better; }

absl::StatusOr<ConfusionMatrix> Confusion(
    std::span<const data::BinaryLabel> predicted,
    std::span<const data::BinaryLabel> truth) {
  if (absl::Status s = CheckLengths(predicted.size(), truth.size()); !s.ok()) {
    return s;
  }
  ConfusionMatrix cm;
  for (size_t i = 0; i < truth.size(); ++i) {
    const bool p = predicted[i] == data::kAttack;
    if (truth[i] == data::kAttack) {
      ++(p ? cm.tp : cm.fn);
    } else {
      ++(p ? cm.fp : cm.tn);
    }
  }
  return cm;
}

absl::StatusOr<Fraction> ExactRate(const ConfusionMatrix& cm, Metric metric) {
  Fraction f;
  switch (metric) {
    case Metric::kAccuracy:
      f = {cm.tp + cm.tn, cm.total()};
      break;
    case Metric::kSpecificity:
      f = {cm.tn, cm.negatives()};
      break;
    case Metric::kSensitivity:
      f = {cm.tp, cm.positives()};
      break;
    case Metric::kFpr:
      f = {cm.fp, cm.negatives()};
      break;
    default:
      return absl::InvalidArgumentError(absl::StrCat(
          MetricName(metric), " is not a confusion-matrix rate"));
  }
  if (f.denominator == 0) {
    return absl::FailedPreconditionError(
        absl::StrCat("UndefinedMetric: ", MetricName(metric)));
  }
  return f;
}

Rates RatesFromConfusion(const ConfusionMatrix& cm) {
  auto rate = [&](Metric m) -> std::optional<double> {
    absl::StatusOr<Fraction> f = ExactRate(cm, m);
    if (!f.ok()) return std::nullopt;
    return f->value();
  };
  return {rate(Metric::kAccuracy), rate(Metric::kSpecificity),
          rate(Metric::kSensitivity), rate(Metric::kFpr)};
}

absl::StatusOr<double> Auc(std::span<const double> scores,
                           std::span<const data::BinaryLabel> truth) {
  int64_t positives, negatives;
  absl::StatusOr<std::vector<size_t>> order =
      RankByScore(scores, truth, &positives, &negatives);
  if (!order.ok()) return order.status();
  // Twice the number of correctly ordered pairs, ties counting 1.
  int64_t twice_area = 0;
  int64_t tp_before = 0;
  for (size_t i = 0; i < order->size();) {
    int64_t tp = 0, fp = 0;
    size_t j = i;
    for (; j < order->size() && scores[(*order)[j]] == scores[(*order)[i]]; ++j) {
      ++(truth[(*order)[j]] == data::kAttack ? tp : fp);
    }
    twice_area += fp * (2 * tp_before + tp);
    tp_before += tp;
    i = j;
  }
  return static_cast<double>(twice_area) /
         (2.0 * static_cast<double>(positives) * static_cast<double>(negatives));
}

absl::StatusOr<std::vector<RocPoint>> RocCurve(
    std::span<const double> scores, std::span<const data::BinaryLabel> truth) {
  int64_t positives, negatives;
  absl::StatusOr<std::vector<size_t>> order =
      RankByScore(scores, truth, &positives, &negatives);
  if (!order.ok()) return order.status();
  std::vector<RocPoint> curve;
  curve.push_back({std::numeric_limits<double>::infinity(), 0.0, 0.0});
  int64_t tp = 0, fp = 0;
  for (size_t i = 0; i < order->size();) {
    const double threshold = scores[(*order)[i]];
    size_t j = i;
    for (; j < order->size() && scores[(*order)[j]] == threshold; ++j) {
      ++(truth[(*order)[j]] == data::kAttack ? tp : fp);
    }
    curve.push_back({threshold,
                     static_cast<double>(fp) / static_cast<double>(negatives),
                     static_cast<double>(tp) / static_cast<double>(positives)});
    i = j;
  }
  return curve;
}

double TrapezoidArea(std::span<const RocPoint> curve) {
  double area = 0.0;
  for (size_t i = 1; i < curve.size(); ++i) {
    area += (curve[i].fpr - curve[i - 1].fpr) *
            (curve[i].tpr + curve[i - 1].tpr) / 2.0;
  }
  return area;
}

std::optional<double> MetricSet::Get(Metric metric) const {
  switch (metric) {
    case Metric::kAccuracy: return accuracy;
    case Metric::kSpecificity: return specificity;
    case Metric::kSensitivity: return sensitivity;
    case Metric::kFpr: return fpr;
    case Metric::kAuc: return auc;
    case Metric::kMbt: return mbt_seconds;
    case Metric::kResponseTime: return avg_response_seconds;
  }
  return std::nullopt;
}

void MetricSet::Set(Metric metric, std::optional<double> value) {
  switch (metric) {
    case Metric::kAccuracy: accuracy = value; break;
    case Metric::kSpecificity: specificity = value; break;
    case Metric::kSensitivity: sensitivity = value; break;
    case Metric::kFpr: fpr = value; break;
    case Metric::kAuc: auc = value; break;
    case Metric::kMbt: mbt_seconds = value.value_or(0.0); break;
    case Metric::kResponseTime: avg_response_seconds = value.value_or(0.0); break;
  }
}

MetricSet MeanMetricSet(std::span<const MetricSet> sets) {
  MetricSet mean;
  if (sets.empty()) return mean;
  const double n = static_cast<double>(sets.size());
  for (const Metric metric : kQualityMetrics) {
    double sum = 0.0;
    bool defined = true;
    for (const MetricSet& s : sets) {
      const std::optional<double> v = s.Get(metric);
      if (!v) {
        defined = false;
        break;
      }
      sum += *v;
    }
    mean.Set(metric, defined ? std::optional<double>(sum / n) : std::nullopt);
  }
  double mbt = 0.0, resp = 0.0;
  for (const MetricSet& s : sets) {
    mbt += s.mbt_seconds;
    resp += s.avg_response_seconds;
  }
  mean.mbt_seconds = mbt / n;
  mean.avg_response_seconds = resp / n;
  return mean;
}

}  // namespace idsbench::eval
