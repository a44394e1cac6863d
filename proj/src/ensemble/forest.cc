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

#include "idsbench/ensemble/forest.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "idsbench/tree/cart.h"
#include "idsbench/tree/training_data.h"
#include "idsbench/utils/parallel.h"
#include "idsbench/utils/random.h"

namespace idsbench::ensemble {

ForestParams RandomForestDefaults() { return ForestParams(); }

ForestParams ExtraTreesDefaults() {
  ForestParams params;
  params.n_estimators = 1788;
  params.max_depth = 10;
  params.min_split_size = 5;
  params.bootstrap = false;
  params.split_mode = tree::SplitMode::kRandomCut;
  return params;
}

int DefaultFeatureSubsetSize(model::ModelKind kind, size_t num_features) {
  const double q = static_cast<double>(num_features);
  int size = 1;
  if (kind == model::ModelKind::kExtraTrees) {
    size = static_cast<int>(std::ceil(std::log2(q)));
  } else {
    size = static_cast<int>(std::floor(std::sqrt(q)));
  }
  return std::max(size, 1);
}

model::Prediction ForestModel::PredictUnchecked(std::span<const double> x) const {
  double score_sum = 0.0;
  size_t attack_votes = 0;
  for (const tree::DecisionTree& t : trees_) {
    const tree::TreeNode& leaf = t.Leaf(x);
    score_sum += leaf.value;
    attack_votes += leaf.weight_attack > leaf.weight_normal;
  }
  const double n = static_cast<double>(trees_.size());
  return {static_cast<data::BinaryLabel>(2 * attack_votes > trees_.size()),
          trees_.empty() ? 0.0 : score_sum / n};
}

nlohmann::json ForestModel::ToJson() const {
  nlohmann::json trees = nlohmann::json::array();
  for (const tree::DecisionTree& t : trees_) trees.push_back(t.ToJson());
  return {{"trees", std::move(trees)}};
}

absl::StatusOr<std::unique_ptr<ForestModel>> ForestModel::FromJson(
    model::ModelKind kind, const nlohmann::json& json, size_t num_features) {
  if (!json.contains("trees") || !json["trees"].is_array()) {
    return absl::InvalidArgumentError("forest model without trees");
  }
  std::vector<tree::DecisionTree> trees;
  for (const auto& t : json["trees"]) {
    auto parsed = tree::DecisionTree::FromJson(t, num_features);
    if (!parsed.ok()) return parsed.status();
    trees.push_back(*std::move(parsed));
  }
  return std::make_unique<ForestModel>(kind, std::move(trees), num_features);
}

absl::StatusOr<std::unique_ptr<ForestModel>> FitForest(
    const data::FeatureMatrix& train, const ForestParams& params,
    model::ModelKind kind, uint64_t seed) {
  if (train.num_rows == 0) {
    return absl::InvalidArgumentError("EmptyTrainingSet: no training rows");
  }
  if (params.n_estimators < 1) {
    return absl::InvalidArgumentError("n_estimators must be >= 1");
  }
  tree::TreeParams tree_params;
  tree_params.max_depth = params.max_depth;
  tree_params.min_leaf_size = params.min_leaf_size;
  tree_params.min_split_size = params.min_split_size;
  tree_params.split_mode = params.split_mode;
  tree_params.feature_subset_size =
      params.feature_subset_size.value_or(
          DefaultFeatureSubsetSize(kind, train.num_features));
  if (auto status = tree_params.Validate(); !status.ok()) return status;

  const tree::TrainingData data(train);
  const size_t n = train.num_rows;
  std::vector<tree::DecisionTree> trees(params.n_estimators);
  std::vector<absl::Status> statuses(params.n_estimators);
  utils::ParallelFor(trees.size(), params.workers, [&](size_t t) {
    utils::Rng rng(utils::DeriveSeed(seed, "tree", {t}));
    tree::RowTargets targets;
    if (params.bootstrap) {
      targets.multiplicity.assign(n, 0);
      for (size_t i = 0; i < n; ++i) ++targets.multiplicity[utils::UniformIndex(rng, n)];
    }
    auto grown = tree::GrowTree(data, targets, tree_params, rng);
    if (!grown.ok()) {
      statuses[t] = grown.status();
      return;
    }
    trees[t] = std::move(grown->tree);
  });
  for (const absl::Status& status : statuses) {
    if (!status.ok()) return status;
  }
  return std::make_unique<ForestModel>(kind, std::move(trees), train.num_features);
}

}  // namespace idsbench::ensemble
