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

#include "idsbench/eval/timing.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "idsbench/utils/parallel.h"
#include "idsbench/utils/status_macros.h"

namespace idsbench::eval {

double Median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

absl::StatusOr<double> MeasureMbt(const ClassifierSpec& spec,
                                  const data::FeatureMatrix& train,
                                  uint64_t seed, int runs) {
  if (runs < 1) return absl::InvalidArgumentError("runs must be >= 1");
  std::vector<double> times;
  for (int i = 0; i < runs; ++i) {
    const utils::Stopwatch watch;
    ASSIGN_OR_RETURN(std::unique_ptr<model::Model> model,
                     TrainClassifier(spec, train, seed));
    times.push_back(watch.ElapsedSeconds());
  }
  return Median(std::move(times));
}

absl::StatusOr<TimedPredictions> PredictTimed(const model::Model& model,
                                              const data::FeatureMatrix& test) {
  if (test.num_rows == 0) {
    return absl::InvalidArgumentError("EmptyTestSet: no test rows");
  }
  if (test.num_features != model.num_features()) {
    return model::DimensionMismatch(model.num_features(), test.num_features);
  }
  TimedPredictions out;
  out.predictions.resize(test.num_rows);
  const utils::Stopwatch watch;
  for (size_t r = 0; r < test.num_rows; ++r) {
    out.predictions[r] = model.PredictUnchecked(test.Row(r));
  }
  out.total_seconds = watch.ElapsedSeconds();
  out.seconds_per_instance =
      out.total_seconds / static_cast<double>(test.num_rows);
  return out;
}

absl::StatusOr<double> MeasureResponseTime(const model::Model& model,
                                           const data::FeatureMatrix& test) {
  ASSIGN_OR_RETURN(const TimedPredictions timed, PredictTimed(model, test));
  return timed.seconds_per_instance;
}

}  // namespace idsbench::eval
