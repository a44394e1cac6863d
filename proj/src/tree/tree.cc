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

#include "idsbench/tree/tree.h"

#include <algorithm>

#include "absl/strings/str_cat.h"

namespace idsbench::tree {

absl::Status TreeParams::Validate() const {
  if (max_depth < 1) return absl::InvalidArgumentError("max_depth must be >= 1");
  if (min_leaf_size < 1) {
    return absl::InvalidArgumentError("min_leaf_size must be >= 1");
  }
  if (min_split_size < 2) {
    return absl::InvalidArgumentError("min_split_size must be >= 2");
  }
  if (feature_subset_size && *feature_subset_size < 1) {
    return absl::InvalidArgumentError("feature_subset_size must be >= 1");
  }
  if (lambda < 0.0 || gamma < 0.0 || min_child_weight < 0.0) {
    return absl::InvalidArgumentError(
        "lambda, gamma and min_child_weight must be >= 0");
  }
  return absl::OkStatus();
}

absl::StatusOr<double> GiniImpurity(double n0, double n1) {
  const double total = n0 + n1;
  if (!(total > 0.0)) return absl::InvalidArgumentError("EmptyNode");
  const double p0 = n0 / total;
  const double p1 = n1 / total;
  return 1.0 - p0 * p0 - p1 * p1;
}

int DecisionTree::LeafIndex(std::span<const double> x) const {
  int i = 0;
  while (!nodes_[i].is_leaf()) {
    const TreeNode& node = nodes_[i];
    i = x[node.feature] <= node.threshold ? node.left : node.right;
  }
  return i;
}

uint8_t DecisionTree::LeafLabel(std::span<const double> x) const {
  const TreeNode& leaf = Leaf(x);
  return leaf.weight_attack > leaf.weight_normal ? 1 : 0;
}

int DecisionTree::Depth() const {
  int depth = 0;
  for (const TreeNode& node : nodes_) depth = std::max(depth, node.depth);
  return depth;
}

int DecisionTree::NumLeaves() const {
  return static_cast<int>(std::count_if(
      nodes_.begin(), nodes_.end(), [](const TreeNode& n) { return n.is_leaf(); }));
}

// Nodes are stored as arrays
// [feature, threshold, left, right, gain, weight_normal, weight_attack,
//  value, num_rows, depth].
nlohmann::json DecisionTree::ToJson() const {
  nlohmann::json nodes = nlohmann::json::array();
  for (const TreeNode& n : nodes_) {
    nodes.push_back({n.feature, n.threshold, n.left, n.right, n.gain,
                     n.weight_normal, n.weight_attack, n.value, n.num_rows,
                     n.depth});
  }
  return nodes;
}

absl::StatusOr<DecisionTree> DecisionTree::FromJson(const nlohmann::json& json,
                                                    size_t num_features) {
  if (!json.is_array() || json.empty()) {
    return absl::InvalidArgumentError("tree must be a non-empty node array");
  }
  std::vector<TreeNode> nodes;
  nodes.reserve(json.size());
  try {
    for (const auto& a : json) {
      if (!a.is_array() || a.size() != 10) {
        return absl::InvalidArgumentError("tree node must have 10 fields");
      }
      TreeNode n;
      n.feature = a[0].get<int>();
      n.threshold = a[1].get<double>();
      n.left = a[2].get<int>();
      n.right = a[3].get<int>();
      n.gain = a[4].get<double>();
      n.weight_normal = a[5].get<double>();
      n.weight_attack = a[6].get<double>();
      n.value = a[7].get<double>();
      n.num_rows = a[8].get<int64_t>();
      n.depth = a[9].get<int>();
      nodes.push_back(n);
    }
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("malformed tree: ", e.what()));
  }
  const int size = static_cast<int>(nodes.size());
  for (int i = 0; i < size; ++i) {
    const TreeNode& n = nodes[i];
    if (n.is_leaf()) continue;
    if (n.feature >= static_cast<int>(num_features) || n.left <= i ||
        n.right <= i || n.left >= size || n.right >= size) {
      return absl::InvalidArgumentError(
          absl::StrCat("malformed tree: bad links at node ", i));
    }
  }
  return DecisionTree(std::move(nodes), num_features);
}

}  // namespace idsbench::tree
