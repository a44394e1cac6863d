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

// Binary decision trees with axis-aligned "x[feature] <= threshold" tests.

#ifndef IDSBENCH_TREE_TREE_H_
#define IDSBENCH_TREE_TREE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"

namespace idsbench::tree {

enum class SplitMode {
  // Best midpoint threshold of every candidate feature.
  kBest,
  // One uniform random threshold per candidate feature (extremely
  // randomized trees).
  kRandomCut,
};

enum class TreeTask {
  // Weighted Gini impurity; leaves hold class weights.
  kClassifyGini,
  // Squared error on a real target; leaves hold the weighted mean.
  kRegressMse,
  // Second-order boosting objective over gradient/hessian pairs with L2
  // leaf penalty `lambda` and split penalty `gamma`; leaves hold
  // -G / (H + lambda).
  kSecondOrder,
};

struct TreeParams {
  int max_depth = 10;
  int64_t min_leaf_size = 2;
  int64_t min_split_size = 2;
  // Features examined per node; nullopt means all.
  std::optional<int> feature_subset_size;
  SplitMode split_mode = SplitMode::kBest;
  TreeTask task = TreeTask::kClassifyGini;
  // kSecondOrder only.
  double lambda = 1.0;
  double gamma = 0.0;
  double min_child_weight = 0.0;

  absl::Status Validate() const;
};

struct SplitRule {
  int feature = -1;
  double threshold = 0.0;
  double gain = 0.0;
};

struct TreeNode {
  // -1 for leaves.
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double gain = 0.0;
  // Training weight of each class reaching the node (kClassifyGini) or
  // total weight / hessian (other tasks, in weight_normal).
  double weight_normal = 0.0;
  double weight_attack = 0.0;
  // Leaf output: attack probability, mean target or boosting weight.
  double value = 0.0;
  // Training rows reaching the node (bootstrap duplicates counted).
  int64_t num_rows = 0;
  int depth = 0;

  bool is_leaf() const { return feature < 0; }
};

// 1 - p0^2 - p1^2 of the class weights. Fails with EmptyNode if both are 0.
absl::StatusOr<double> GiniImpurity(double n0, double n1);

class DecisionTree {
 public:
  DecisionTree() = default;
  explicit DecisionTree(std::vector<TreeNode> nodes, size_t num_features = 0)
      : nodes_(std::move(nodes)), num_features_(num_features) {}

  // Nodes in pre-order; nodes()[0] is the root.
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  std::vector<TreeNode>& mutable_nodes() { return nodes_; }
  size_t num_features() const { return num_features_; }

  // Index of the leaf `x` falls into.
  int LeafIndex(std::span<const double> x) const;
  const TreeNode& Leaf(std::span<const double> x) const {
    return nodes_[LeafIndex(x)];
  }

  // Majority class at the leaf (ties go to normal) and the leaf's attack
  // fraction. Meaningful for kClassifyGini trees.
  uint8_t LeafLabel(std::span<const double> x) const;
  double LeafScore(std::span<const double> x) const { return Leaf(x).value; }

  int Depth() const;
  int NumLeaves() const;

  nlohmann::json ToJson() const;
  static absl::StatusOr<DecisionTree> FromJson(const nlohmann::json& json,
                                               size_t num_features);

 private:
  std::vector<TreeNode> nodes_;
  size_t num_features_ = 0;
};

}  // namespace idsbench::tree

#endif  // IDSBENCH_TREE_TREE_H_
