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

#include "idsbench/ensemble/adaboost.h"

#include <cmath>

#include "idsbench/tree/cart.h"
#include "idsbench/tree/training_data.h"
#include "idsbench/utils/status_macros.h"

namespace idsbench::ensemble {

absl::StatusOr<std::unique_ptr<BoostModel>> FitAdaBoost(
    const data::FeatureMatrix& train, const AdaBoostParams& params,
    uint64_t seed, AdaBoostTrace* trace) {
  RETURN_IF_ERROR(CheckBothClasses(train));
  if (params.n_estimators < 1 || !(params.learning_rate > 0.0)) {
    return absl::InvalidArgumentError(
        "AdaBoost needs n_estimators >= 1 and learning_rate > 0");
  }
  tree::TreeParams stump;
  stump.max_depth = 1;
  stump.min_leaf_size = 1;
  stump.min_split_size = 2;

  const tree::TrainingData data(train);
  const size_t n = train.num_rows;
  tree::RowTargets targets;
  targets.weights.assign(n, 1.0 / static_cast<double>(n));
  utils::Rng rng(seed);
  std::vector<BoostStage> stages;
  std::vector<bool> missed(n);

  for (int p = 0; p < params.n_estimators; ++p) {
    ASSIGN_OR_RETURN(tree::GrownTree grown,
                     tree::GrowTree(data, targets, stump, rng));
    double error = 0.0;
    double total = 0.0;
    for (size_t i = 0; i < n; ++i) {
      const tree::TreeNode& leaf = grown.tree.nodes()[grown.leaf_of_row[i]];
      const data::BinaryLabel predicted = leaf.weight_attack > leaf.weight_normal;
      missed[i] = predicted != train.labels[i];
      total += targets.weights[i];
      if (missed[i]) error += targets.weights[i];
    }
    error /= total;
    if (error >= 0.5) {
      if (trace) trace->errors.push_back(error);
      break;
    }
    if (error <= 0.0) {
      stages.push_back({std::move(grown.tree), 1.0});
      if (trace) {
        trace->errors.push_back(0.0);
        trace->betas.push_back(1.0);
        trace->weights.push_back(targets.weights);
      }
      break;
    }
    const double beta = params.learning_rate * std::log((1.0 - error) / error);
    const double boost = std::exp(beta);
    double sum = 0.0;
    for (size_t i = 0; i < n; ++i) {
      if (missed[i]) targets.weights[i] *= boost;
      sum += targets.weights[i];
    }
    for (double& w : targets.weights) w /= sum;
    stages.push_back({std::move(grown.tree), beta});
    if (trace) {
      trace->errors.push_back(error);
      trace->betas.push_back(beta);
      trace->weights.push_back(targets.weights);
    }
  }
  return std::make_unique<BoostModel>(model::ModelKind::kAdaBoost,
                                      train.num_features,
                                      params.learning_rate, 0.0,
                                      std::move(stages));
}

}  // namespace idsbench::ensemble
