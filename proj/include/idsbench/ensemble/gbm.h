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

// Gradient boosting machine for LogLoss.
//
// F starts at the log-odds of the attack rate. Each stage fits a squared
// error regression tree to the residuals y - p, replaces every leaf value
// by the Newton step sum(y - p) / sum(p (1 - p)) over its rows and adds
// learning_rate times the tree to F.

#ifndef IDSBENCH_ENSEMBLE_GBM_H_
#define IDSBENCH_ENSEMBLE_GBM_H_

#include <memory>
#include <vector>

#include "absl/status/statusor.h"
#include "idsbench/ensemble/boost_model.h"

namespace idsbench::ensemble {

struct GbmParams {
  int n_estimators = 500;
  int max_depth = 3;
  int64_t min_split_size = 100;
  int64_t min_leaf_size = 1;
  double learning_rate = 0.1;
};

struct GbmTrace {
  // Mean training LogLoss of the initial model and after every stage.
  std::vector<double> train_loss;
};

absl::StatusOr<std::unique_ptr<BoostModel>> FitGbm(
    const data::FeatureMatrix& train, const GbmParams& params, uint64_t seed,
    GbmTrace* trace = nullptr);

}  // namespace idsbench::ensemble

#endif  // IDSBENCH_ENSEMBLE_GBM_H_
