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

// Model build time and average response time, both on a monotonic clock.

#ifndef IDSBENCH_EVAL_TIMING_H_
#define IDSBENCH_EVAL_TIMING_H_

#include <vector>

#include "absl/status/statusor.h"
#include "idsbench/data/preprocess.h"
#include "idsbench/eval/classifier.h"
#include "idsbench/model/model.h"

namespace idsbench::eval {

// Median wall-clock seconds of `runs` fits of `spec` on the already
// preprocessed `train`.
absl::StatusOr<double> MeasureMbt(const ClassifierSpec& spec,
                                  const data::FeatureMatrix& train,
                                  uint64_t seed, int runs = 3);

struct TimedPredictions {
  std::vector<model::Prediction> predictions;
  double total_seconds = 0.0;
  // total_seconds / number of instances.
  double seconds_per_instance = 0.0;
};

// Classifies the rows of `test` one at a time. Errors: EmptyTestSet,
// DimensionMismatch.
absl::StatusOr<TimedPredictions> PredictTimed(const model::Model& model,
                                              const data::FeatureMatrix& test);

// Average response time in seconds per instance.
absl::StatusOr<double> MeasureResponseTime(const model::Model& model,
                                           const data::FeatureMatrix& test);

// Median of a non-empty sample (mean of the two middle values for even
// sizes).
double Median(std::vector<double> values);

}  // namespace idsbench::eval

#endif  // IDSBENCH_EVAL_TIMING_H_
