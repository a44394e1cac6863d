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

#include "idsbench/eval/validation.h"

#include "absl/strings/str_cat.h"
#include "idsbench/data/preprocess.h"
#include "idsbench/eval/timing.h"
#include "idsbench/utils/parallel.h"
#include "idsbench/utils/random.h"
#include "idsbench/utils/status_macros.h"

namespace idsbench::eval {
namespace {

absl::StatusOr<MetricSet> RunRound(const ClassifierSpec& spec,
                                   const data::Dataset& ds,
                                   const data::SplitPlan& plan, int repeat,
                                   int round) {
  const uint64_t split_seed = SplitSeed(plan, repeat, round);
  if (plan.kind == data::SplitPlan::Kind::kHoldout) {
    data::IndexSplit split;
    if (plan.stratified) {
      ASSIGN_OR_RETURN(split, data::SplitHoldoutStratified(
                                  ds.labels(), plan.train_fraction, split_seed));
    } else {
      ASSIGN_OR_RETURN(split, data::SplitHoldout(ds.num_rows(),
                                                 plan.train_fraction, split_seed));
    }
    return EvaluateSplit(spec, ds, split,
                         FitSeed(plan.seed, repeat, round, 0));
  }
  ASSIGN_OR_RETURN(const std::vector<data::IndexSplit> folds,
                   data::KFoldPartitions(ds.num_rows(), plan.k, split_seed));
  std::vector<MetricSet> fold_metrics;
  fold_metrics.reserve(folds.size());
  for (size_t f = 0; f < folds.size(); ++f) {
    ASSIGN_OR_RETURN(
        MetricSet m,
        EvaluateSplit(spec, ds, folds[f],
                      FitSeed(plan.seed, repeat, round, static_cast<int>(f))));
    fold_metrics.push_back(m);
  }
  return MeanMetricSet(fold_metrics);
}

}  // namespace

uint64_t SplitSeed(const data::SplitPlan& plan, int repeat, int round) {
  const absl::string_view name =
      plan.kind == data::SplitPlan::Kind::kHoldout ? "holdout" : "kfold";
  return utils::DeriveSeed(plan.seed, name,
                           {static_cast<uint64_t>(repeat),
                            static_cast<uint64_t>(round)});
}

uint64_t FitSeed(uint64_t plan_seed, int repeat, int round, int fold) {
  return utils::DeriveSeed(plan_seed, "fit",
                           {static_cast<uint64_t>(repeat),
                            static_cast<uint64_t>(round),
                            static_cast<uint64_t>(fold)});
}

absl::StatusOr<MetricSet> EvaluateModel(const model::Model& model,
                                        const data::FeatureMatrix& test) {
  ASSIGN_OR_RETURN(const TimedPredictions timed, PredictTimed(model, test));
  std::vector<data::BinaryLabel> labels(test.num_rows);
  std::vector<double> scores(test.num_rows);
  for (size_t i = 0; i < test.num_rows; ++i) {
    labels[i] = timed.predictions[i].label;
    scores[i] = timed.predictions[i].score;
  }
  ASSIGN_OR_RETURN(const ConfusionMatrix cm, Confusion(labels, test.labels));
  const Rates rates = RatesFromConfusion(cm);
  MetricSet m;
  m.accuracy = rates.accuracy;
  m.specificity = rates.specificity;
  m.sensitivity = rates.sensitivity;
  m.fpr = rates.fpr;
  if (cm.positives() > 0 && cm.negatives() > 0) {
    ASSIGN_OR_RETURN(m.auc, Auc(scores, test.labels));
  }
  m.avg_response_seconds = timed.seconds_per_instance;
  return m;
}

absl::StatusOr<MetricSet> EvaluateSplit(const ClassifierSpec& spec,
                                        const data::Dataset& ds,
                                        const data::IndexSplit& split,
                                        uint64_t fit_seed) {
  const data::Dataset train_ds = ds.Subset(split.train);
  const data::Dataset test_ds = ds.Subset(split.test);
  const data::Preprocessor pre = data::Preprocessor::Fit(train_ds);
  ASSIGN_OR_RETURN(const data::FeatureMatrix train, pre.Transform(train_ds));
  ASSIGN_OR_RETURN(const data::FeatureMatrix test, pre.Transform(test_ds));
  const utils::Stopwatch watch;
  ASSIGN_OR_RETURN(const std::unique_ptr<model::Model> model,
                   TrainClassifier(spec, train, fit_seed));
  const double mbt = watch.ElapsedSeconds();
  ASSIGN_OR_RETURN(MetricSet m, EvaluateModel(*model, test));
  m.mbt_seconds = mbt;
  return m;
}

absl::StatusOr<ValidationReport> Validate(const ClassifierSpec& spec,
                                          const data::Dataset& ds,
                                          const data::SplitPlan& plan,
                                          absl::string_view dataset_name,
                                          const ValidationOptions& options) {
  RETURN_IF_ERROR(plan.Validate());
  const size_t attacks = ds.CountLabel(data::kAttack);
  if (attacks == 0 || attacks == ds.num_rows()) {
    return absl::FailedPreconditionError(absl::StrCat(
        "SingleClassTrainingSet: dataset ", dataset_name,
        " needs both attack and normal rows"));
  }
  const size_t rounds = static_cast<size_t>(plan.rounds);
  const size_t total = static_cast<size_t>(plan.repeats) * rounds;
  std::vector<absl::StatusOr<MetricSet>> results(total, MetricSet());
  utils::ParallelFor(total, options.workers, [&](size_t i) {
    results[i] = RunRound(spec, ds, plan, static_cast<int>(i / rounds),
                          static_cast<int>(i % rounds));
  });

  ValidationReport report;
  report.dataset = std::string(dataset_name);
  report.classifier = spec.Name();
  report.params = spec.ParamsToJson();
  report.plan = plan;
  std::vector<MetricSet> all;
  for (size_t i = 0; i < total; ++i) {
    if (!results[i].ok()) {
      return absl::Status(
          results[i].status().code(),
          absl::StrCat(results[i].status().message(), " (repeat ", i / rounds,
                       ", round ", i % rounds, ")"));
    }
    report.rounds.push_back({static_cast<int>(i / rounds),
                             static_cast<int>(i % rounds), *results[i]});
    all.push_back(*results[i]);
  }
  for (size_t r = 0; r < static_cast<size_t>(plan.repeats); ++r) {
    report.repeat_means.push_back(MeanMetricSet(
        std::span<const MetricSet>(all.data() + r * rounds, rounds)));
  }
  report.mean = MeanMetricSet(all);
  return report;
}

}  // namespace idsbench::eval
