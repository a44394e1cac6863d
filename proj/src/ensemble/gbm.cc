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

#include "idsbench/ensemble/gbm.h"

#include <cmath>

#include "idsbench/model/loss.h"
#include "idsbench/tree/cart.h"
#include "idsbench/tree/training_data.h"
#include "idsbench/utils/status_macros.h"

namespace idsbench::ensemble {
namespace {

// Newton steps with a smaller hessian sum are set to 0.
constexpr double kMinHessian = 1e-150;

}  // namespace

absl::StatusOr<std::unique_ptr<BoostModel>> FitGbm(
    const data::FeatureMatrix& train, const GbmParams& params, uint64_t seed,
    GbmTrace* trace) {
  RETURN_IF_ERROR(CheckBothClasses(train));
  if (params.n_estimators < 1 || !(params.learning_rate > 0.0)) {
    return absl::InvalidArgumentError(
        "GBM needs n_estimators >= 1 and learning_rate > 0");
  }
  tree::TreeParams tree_params;
  tree_params.task = tree::TreeTask::kRegressMse;
  tree_params.max_depth = params.max_depth;
  tree_params.min_split_size = params.min_split_size;
  tree_params.min_leaf_size = params.min_leaf_size;
  RETURN_IF_ERROR(tree_params.Validate());

  const size_t n = train.num_rows;
  const double attack_rate =
      static_cast<double>(train.CountLabel(data::kAttack)) / static_cast<double>(n);
  const double base_score = std::log(attack_rate / (1.0 - attack_rate));

  const tree::TrainingData data(train);
  std::vector<double> f(n, base_score);
  std::vector<double> p(n);
  tree::RowTargets targets;
  targets.targets.resize(n);
  utils::Rng rng(seed);
  std::vector<BoostStage> stages;

  auto update_probabilities = [&] {
    for (size_t i = 0; i < n; ++i) p[i] = model::Sigmoid(f[i]);
    if (trace) trace->train_loss.push_back(model::MeanLogLoss(p, train.labels));
  };
  update_probabilities();

  for (int m = 0; m < params.n_estimators; ++m) {
    for (size_t i = 0; i < n; ++i) targets.targets[i] = train.labels[i] - p[i];
    ASSIGN_OR_RETURN(tree::GrownTree grown,
                     tree::GrowTree(data, targets, tree_params, rng));
    std::vector<tree::TreeNode>& nodes = grown.tree.mutable_nodes();
    std::vector<double> numerator(nodes.size(), 0.0);
    std::vector<double> denominator(nodes.size(), 0.0);
    for (size_t i = 0; i < n; ++i) {
      const int leaf = grown.leaf_of_row[i];
      numerator[leaf] += targets.targets[i];
      denominator[leaf] += p[i] * (1.0 - p[i]);
    }
    for (size_t j = 0; j < nodes.size(); ++j) {
      if (!nodes[j].is_leaf()) continue;
      nodes[j].value = std::abs(denominator[j]) < kMinHessian
                           ? 0.0
                           : numerator[j] / denominator[j];
    }
    for (size_t i = 0; i < n; ++i) {
      f[i] += params.learning_rate * nodes[grown.leaf_of_row[i]].value;
    }
    stages.push_back({std::move(grown.tree), 1.0});
    update_probabilities();
  }
  return std::make_unique<BoostModel>(model::ModelKind::kGbm, train.num_features,
                                      params.learning_rate, base_score,
                                      std::move(stages));
}

}  // namespace idsbench::ensemble
