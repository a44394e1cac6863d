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

// Greedy depth-first tree growing (CART) and the CART classifier.
//
// A node is split when it is shallower than max_depth, holds at least
// min_split_size rows and the best candidate split has positive gain with
// both children holding at least min_leaf_size rows. Candidate thresholds
// are midpoints between consecutive distinct values (kBest) or one uniform
// draw between the node's minimum and maximum (kRandomCut). Ties between
// candidates keep the lowest feature index, then the lowest threshold.
//
// With a feature subset of size K, features are visited in random order
// until K of them are non-constant in the node; those are then evaluated in
// ascending index order.

#ifndef IDSBENCH_TREE_CART_H_
#define IDSBENCH_TREE_CART_H_

#include <memory>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "idsbench/data/preprocess.h"
#include "idsbench/model/model.h"
#include "idsbench/tree/training_data.h"
#include "idsbench/tree/tree.h"
#include "idsbench/utils/random.h"

namespace idsbench::tree {

// Per-row training signal. Vectors are indexed by row of the TrainingData
// and may be left empty where noted.
struct RowTargets {
  // Copies of each row in the training sample (0 drops the row), e.g.
  // bootstrap counts. Empty means one copy of every row.
  std::vector<uint32_t> multiplicity;
  // kClassifyGini and kRegressMse: per-copy weight. Empty means 1.
  std::vector<double> weights;
  // kRegressMse: regression target.
  std::vector<double> targets;
  // kSecondOrder: loss gradient and hessian.
  std::vector<double> gradients;
  std::vector<double> hessians;
};

struct GrownTree {
  DecisionTree tree;
  // Leaf of every training row; -1 for rows with multiplicity 0.
  std::vector<int> leaf_of_row;
};

absl::StatusOr<GrownTree> GrowTree(const TrainingData& data,
                                   const RowTargets& targets,
                                   const TreeParams& params, utils::Rng& rng);

// Split the grower would apply at the root; nullopt if the root stays a
// leaf.
absl::StatusOr<std::optional<SplitRule>> FindBestSplit(
    const TrainingData& data, const RowTargets& targets,
    const TreeParams& params, utils::Rng& rng);

// Gini decision tree classifier. A leaf predicts its majority class (ties
// go to normal) with score n_attack / (n_attack + n_normal).
class CartModel : public model::Model {
 public:
  explicit CartModel(DecisionTree tree) : tree_(std::move(tree)) {}

  model::ModelKind kind() const override { return model::ModelKind::kCart; }
  size_t num_features() const override { return tree_.num_features(); }
  model::Prediction PredictUnchecked(std::span<const double> x) const override;
  nlohmann::json ToJson() const override;

  static absl::StatusOr<std::unique_ptr<CartModel>> FromJson(
      const nlohmann::json& json, size_t num_features);

  const DecisionTree& tree() const { return tree_; }

 private:
  DecisionTree tree_;
};

// Default CART parameters: depth 10, leaves of at least 2 rows.
TreeParams DefaultCartParams();

absl::StatusOr<std::unique_ptr<CartModel>> FitCart(
    const data::FeatureMatrix& train, const TreeParams& params, uint64_t seed);

}  // namespace idsbench::tree

#endif  // IDSBENCH_TREE_CART_H_
