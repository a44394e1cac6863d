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

// Discrete AdaBoost (SAMME, two classes) over weighted Gini stumps.
//
// Round p fits a stump to the current instance weights and computes its
// weighted error eps. The stump gets beta = learning_rate * ln((1-eps)/eps),
// misclassified weights are multiplied by exp(beta) and all weights are
// renormalized to sum 1. Boosting stops when eps >= 0.5 (the stump is
// discarded) or eps = 0 (the stump is kept with beta = 1).

#ifndef IDSBENCH_ENSEMBLE_ADABOOST_H_
#define IDSBENCH_ENSEMBLE_ADABOOST_H_

#include <memory>
#include <vector>

#include "absl/status/statusor.h"
#include "idsbench/ensemble/boost_model.h"

namespace idsbench::ensemble {

struct AdaBoostParams {
  int n_estimators = 50;
  double learning_rate = 0.1;
};

// Per-round record of a fit.
struct AdaBoostTrace {
  std::vector<double> errors;
  std::vector<double> betas;
  // Instance weights after each kept round.
  std::vector<std::vector<double>> weights;
};

absl::StatusOr<std::unique_ptr<BoostModel>> FitAdaBoost(
    const data::FeatureMatrix& train, const AdaBoostParams& params,
    uint64_t seed, AdaBoostTrace* trace = nullptr);

}  // namespace idsbench::ensemble

#endif  // IDSBENCH_ENSEMBLE_ADABOOST_H_
