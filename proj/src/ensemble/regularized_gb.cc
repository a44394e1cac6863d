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

#include "idsbench/ensemble/regularized_gb.h"

#include <algorithm>
#include <cmath>

#include "idsbench/model/loss.h"
#include "idsbench/tree/cart.h"
#include "idsbench/tree/training_data.h"
#include "idsbench/utils/random.h"
#include "idsbench/utils/status_macros.h"

namespace idsbench::ensemble {

double RegularizedLeafWeight(double g_sum, double h_sum, double lambda) {
  return -g_sum / (h_sum + lambda);
}

double RegularizedSplitGain(double g_left, double h_left, double g_right,
                            double h_right, double lambda, double gamma) {
  const double g = g_left + g_right;
  const double h = h_left + h_right;
  return 0.5 * (g_left * g_left / (h_left + lambda) +
                g_right * g_right / (h_right + lambda) - g * g / (h + lambda)) -
         gamma;
}

absl::StatusOr<std::unique_ptr<BoostModel>> FitRegularizedGb(
    const data::FeatureMatrix& train, const RegularizedGbParams& params,
    uint64_t seed, RegularizedGbTrace* trace) {
  RETURN_IF_ERROR(CheckBothClasses(train));
  if (params.n_estimators < 1 || !(params.learning_rate > 0.0)) {
    return absl::InvalidArgumentError(
        "regularized boosting needs n_estimators >= 1 and learning_rate > 0");
  }
  if (!(params.subsample > 0.0 && params.subsample <= 1.0)) {
    return absl::InvalidArgumentError("subsample must be in (0, 1]");
  }
  tree::TreeParams tree_params;
  tree_params.task = tree::TreeTask::kSecondOrder;
  tree_params.max_depth = params.max_depth;
  tree_params.min_leaf_size = 1;
  tree_params.min_split_size = 2;
  tree_params.lambda = params.lambda;
  tree_params.gamma = params.gamma;
  tree_params.min_child_weight = params.min_child_weight;
  RETURN_IF_ERROR(tree_params.Validate());

  const size_t n = train.num_rows;
  const double attack_rate =
      static_cast<double>(train.CountLabel(data::kAttack)) / static_cast<double>(n);
  const double base_score = std::log(attack_rate / (1.0 - attack_rate));
  const size_t sample_size = std::max<size_t>(
      1, static_cast<size_t>(std::llround(params.subsample * static_cast<double>(n))));

  const tree::TrainingData data(train);
  std::vector<double> f(n, base_score);
  std::vector<double> p(n);
  tree::RowTargets targets;
  targets.gradients.resize(n);
  targets.hessians.resize(n);
  targets.multiplicity.resize(n);
  utils::Rng rng(seed);
  std::vector<BoostStage> stages;

  auto update_probabilities = [&] {
    for (size_t i = 0; i < n; ++i) p[i] = model::Sigmoid(f[i]);
    if (trace) trace->train_loss.push_back(model::MeanLogLoss(p, train.labels));
  };
  update_probabilities();

  for (int m = 0; m < params.n_estimators; ++m) {
    std::vector<size_t> sample =
        utils::SampleWithoutReplacement(n, sample_size, rng);
    std::fill(targets.multiplicity.begin(), targets.multiplicity.end(), 0);
    for (const size_t i : sample) targets.multiplicity[i] = 1;
    for (size_t i = 0; i < n; ++i) {
      targets.gradients[i] = p[i] - train.labels[i];
      targets.hessians[i] = p[i] * (1.0 - p[i]);
    }
    ASSIGN_OR_RETURN(tree::GrownTree grown,
                     tree::GrowTree(data, targets, tree_params, rng));
    for (size_t i = 0; i < n; ++i) {
      f[i] += params.learning_rate * grown.tree.LeafScore(train.Row(i));
    }
    if (trace) {
      trace->stages.push_back(
          {std::move(sample), targets.gradients, targets.hessians});
    }
    stages.push_back({std::move(grown.tree), 1.0});
    update_probabilities();
  }
  return std::make_unique<BoostModel>(model::ModelKind::kRegularizedGb,
                                      train.num_features, params.learning_rate,
                                      base_score, std::move(stages));
}

}  // namespace idsbench::ensemble
