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

// Repeated hold-out and repeated k-fold validation.
//
// A run has `repeats` outer repetitions of `rounds` inner splits each.
// Every split fits a fresh preprocessor on its training part, trains the
// classifier on the transformed rows and scores the test part. For k-fold
// the round metrics are the means over the k folds.
//
// Seeds are derived from the plan seed so that any single round can be
// replayed on its own:
//   hold-out split  DeriveSeed(seed, "holdout", {repeat, round})
//   k-fold split    DeriveSeed(seed, "kfold", {repeat, round})
//   model fit       DeriveSeed(seed, "fit", {repeat, round, fold})
// with fold = 0 for hold-out.

#ifndef IDSBENCH_EVAL_VALIDATION_H_
#define IDSBENCH_EVAL_VALIDATION_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "idsbench/data/dataset.h"
#include "idsbench/data/sampling.h"
#include "idsbench/eval/classifier.h"
#include "idsbench/eval/metrics.h"

namespace idsbench::eval {

uint64_t SplitSeed(const data::SplitPlan& plan, int repeat, int round);
uint64_t FitSeed(uint64_t plan_seed, int repeat, int round, int fold);

struct RoundResult {
  int repeat = 0;
  int round = 0;
  MetricSet metrics;
};

struct ValidationReport {
  std::string dataset;
  std::string classifier;
  nlohmann::json params;
  data::SplitPlan plan;
  // Ordered by (repeat, round).
  std::vector<RoundResult> rounds;
  std::vector<MetricSet> repeat_means;
  // Mean over all rounds.
  MetricSet mean;
};

struct ValidationOptions {
  // Rounds run concurrently on this many threads. Timings measured with
  // more than one worker include contention.
  int workers = 1;
};

// Predicts every row of `test` one at a time and computes all metrics; AUC
// is undefined when `test` holds one class only.
absl::StatusOr<MetricSet> EvaluateModel(const model::Model& model,
                                        const data::FeatureMatrix& test);

// Preprocesses, fits with `fit_seed` and evaluates one train/test split.
absl::StatusOr<MetricSet> EvaluateSplit(const ClassifierSpec& spec,
                                        const data::Dataset& ds,
                                        const data::IndexSplit& split,
                                        uint64_t fit_seed);

// Runs the plan (hold-out or k-fold by plan.kind). Errors from splitting,
// training and evaluation are propagated; `ds` must hold both classes.
absl::StatusOr<ValidationReport> Validate(const ClassifierSpec& spec,
                                          const data::Dataset& ds,
                                          const data::SplitPlan& plan,
                                          absl::string_view dataset_name,
                                          const ValidationOptions& options = {});

}  // namespace idsbench::eval

#endif  // IDSBENCH_EVAL_VALIDATION_H_
