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

// Random Forest and Extremely Randomized Trees.
//
// Tree t draws its randomness from DeriveSeed(seed, "tree", {t}), so a
// forest does not depend on how many workers fit it.

#ifndef IDSBENCH_ENSEMBLE_FOREST_H_
#define IDSBENCH_ENSEMBLE_FOREST_H_

#include <memory>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "idsbench/data/preprocess.h"
#include "idsbench/model/model.h"
#include "idsbench/tree/tree.h"

namespace idsbench::ensemble {

struct ForestParams {
  int n_estimators = 500;
  int max_depth = 26;
  int64_t min_leaf_size = 1;
  int64_t min_split_size = 2;
  // nullopt: floor(sqrt(q)) for Random Forest, ceil(log2(q)) for Extra
  // Trees (at least 1).
  std::optional<int> feature_subset_size;
  // Each tree sees a bootstrap resample of the training rows.
  bool bootstrap = true;
  tree::SplitMode split_mode = tree::SplitMode::kBest;
  // Threads fitting trees.
  int workers = 1;
};

// 500 trees of depth <= 26 on bootstrap resamples, best splits.
ForestParams RandomForestDefaults();
// 1788 trees of depth <= 10 on the full sample, random cuts, nodes of at
// least 5 rows split.
ForestParams ExtraTreesDefaults();

// Features examined per node for `kind` on q features.
int DefaultFeatureSubsetSize(model::ModelKind kind, size_t num_features);

// Score is the mean of the trees' leaf attack fractions; the label is the
// majority vote of the trees (ties go to normal).
class ForestModel : public model::Model {
 public:
  ForestModel(model::ModelKind kind, std::vector<tree::DecisionTree> trees,
              size_t num_features)
      : kind_(kind), trees_(std::move(trees)), num_features_(num_features) {}

  model::ModelKind kind() const override { return kind_; }
  size_t num_features() const override { return num_features_; }
  model::Prediction PredictUnchecked(std::span<const double> x) const override;
  nlohmann::json ToJson() const override;

  static absl::StatusOr<std::unique_ptr<ForestModel>> FromJson(
      model::ModelKind kind, const nlohmann::json& json, size_t num_features);

  const std::vector<tree::DecisionTree>& trees() const { return trees_; }

 private:
  model::ModelKind kind_;
  std::vector<tree::DecisionTree> trees_;
  size_t num_features_;
};

// `kind` is kRandomForest or kExtraTrees; it only selects the default
// feature subset size and the model tag.
absl::StatusOr<std::unique_ptr<ForestModel>> FitForest(
    const data::FeatureMatrix& train, const ForestParams& params,
    model::ModelKind kind, uint64_t seed);

}  // namespace idsbench::ensemble

#endif  // IDSBENCH_ENSEMBLE_FOREST_H_
