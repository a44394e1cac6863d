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

#include "gtest/gtest.h"
#include "idsbench/tree/cart.h"
#include "idsbench/tree/training_data.h"
#include "idsbench/tree/tree.h"
#include "test_util.h"

namespace idsbench::tree {
namespace {

data::FeatureMatrix Matrix(std::vector<std::vector<double>> rows,
                           std::vector<data::BinaryLabel> labels) {
  data::FeatureMatrix m;
  m.num_rows = rows.size();
  m.num_features = rows[0].size();
  for (const auto& r : rows) m.values.insert(m.values.end(), r.begin(), r.end());
  m.labels = std::move(labels);
  return m;
}

TEST(GiniTest, Values) {
  EXPECT_EQ(*GiniImpurity(5, 5), 0.5);
  EXPECT_EQ(*GiniImpurity(4, 0), 0.0);
  EXPECT_DOUBLE_EQ(*GiniImpurity(1, 3), 0.375);
  EXPECT_FALSE(GiniImpurity(0, 0).ok());
}

TEST(TrainingDataTest, SortedRowsByValueThenIndex) {
  const auto m = Matrix({{3}, {1}, {3}, {2}}, {0, 0, 1, 1});
  const TrainingData data(m);
  const auto sorted = data.sorted_rows(0);
  EXPECT_EQ(std::vector<uint32_t>(sorted.begin(), sorted.end()),
            (std::vector<uint32_t>{1, 3, 0, 2}));
  EXPECT_EQ(data.value(3, 0), 2.0);
}

TEST(CartTest, SeparatesAtMidpoint) {
  const auto m = Matrix({{0.1, 5}, {0.2, 5}, {0.3, 5}, {0.7, 5}, {0.8, 5}, {0.9, 5}},
                        {0, 0, 0, 1, 1, 1});
  const auto model = FitCart(m, DefaultCartParams(), 1);
  ASSERT_TRUE(model.ok());
  const DecisionTree& t = (*model)->tree();
  ASSERT_EQ(t.NumLeaves(), 2);
  EXPECT_EQ(t.nodes()[0].feature, 0);
  EXPECT_DOUBLE_EQ(t.nodes()[0].threshold, 0.5);
  EXPECT_EQ((*model)->PredictUnchecked(std::vector<double>{0.6, 0}).label, 1);
  EXPECT_EQ((*model)->PredictUnchecked(std::vector<double>{0.4, 0}).score, 0.0);
}

TEST(CartTest, TiesKeepLowestFeature) {
  // Features 0 and 1 are identical, so both splits have the same gain.
  const auto m = Matrix({{0, 0}, {0, 0}, {1, 1}, {1, 1}}, {0, 0, 1, 1});
  TreeParams params = DefaultCartParams();
  utils::Rng rng(0);
  const TrainingData data(m);
  const auto split = FindBestSplit(data, RowTargets{}, params, rng);
  ASSERT_TRUE(split.ok());
  ASSERT_TRUE(split->has_value());
  EXPECT_EQ((*split)->feature, 0);
  EXPECT_DOUBLE_EQ((*split)->gain, 0.5);
}

TEST(CartTest, RespectsDepthAndLeafSize) {
  const auto m = testing::MakeMatrix(400, 5, 11, 0.2);
  TreeParams params = DefaultCartParams();
  params.max_depth = 3;
  params.min_leaf_size = 15;
  const auto model = FitCart(m, params, 1);
  ASSERT_TRUE(model.ok());
  EXPECT_LE((*model)->tree().Depth(), 3);
  for (const TreeNode& n : (*model)->tree().nodes()) {
    EXPECT_GE(n.num_rows, 15);
  }
}

TEST(CartTest, PureNodeIsLeaf) {
  const auto m = Matrix({{0}, {1}, {2}}, {1, 1, 1});
  const auto model = FitCart(m, DefaultCartParams(), 1);
  ASSERT_TRUE(model.ok());
  EXPECT_EQ((*model)->tree().NumLeaves(), 1);
  EXPECT_EQ((*model)->PredictUnchecked(std::vector<double>{5}).score, 1.0);
}

TEST(CartTest, JsonRoundTripPredictsIdentically) {
  const auto m = testing::MakeMatrix(300, 4, 5);
  const auto model = FitCart(m, DefaultCartParams(), 1);
  ASSERT_TRUE(model.ok());
  const auto back = CartModel::FromJson((*model)->ToJson(), 4);
  ASSERT_TRUE(back.ok()) << back.status();
  for (size_t i = 0; i < m.num_rows; ++i) {
    EXPECT_EQ((*back)->PredictUnchecked(m.Row(i)).score,
              (*model)->PredictUnchecked(m.Row(i)).score);
  }
  EXPECT_FALSE(CartModel::FromJson((*model)->ToJson(), 3).ok());
}

TEST(CartTest, EmptyTrainingSetFails) {
  data::FeatureMatrix m;
  m.num_features = 2;
  const auto model = FitCart(m, DefaultCartParams(), 1);
  ASSERT_FALSE(model.ok());
  EXPECT_NE(model.status().message().find("EmptyTrainingSet"), std::string::npos);
}

TEST(GrowTreeTest, RandomCutStaysInNodeRange) {
  const auto m = testing::MakeMatrix(200, 3, 8);
  const TrainingData data(m);
  TreeParams params;
  params.split_mode = SplitMode::kRandomCut;
  params.min_leaf_size = 1;
  utils::Rng rng(4);
  const auto grown = GrowTree(data, RowTargets{}, params, rng);
  ASSERT_TRUE(grown.ok());
  for (const TreeNode& n : grown->tree.nodes()) {
    if (n.is_leaf()) continue;
    EXPECT_GT(n.threshold, 0.0);
    EXPECT_LT(n.threshold, 1.0);
  }
  ASSERT_EQ(grown->leaf_of_row.size(), 200u);
  for (size_t i = 0; i < 200; ++i) {
    EXPECT_EQ(grown->leaf_of_row[i], grown->tree.LeafIndex(m.Row(i)));
  }
}

TEST(GrowTreeTest, MultiplicityZeroDropsRows) {
  const auto m = Matrix({{0}, {1}, {2}, {3}}, {0, 1, 0, 1});
  RowTargets targets;
  targets.multiplicity = {1, 0, 1, 0};
  TreeParams params;
  params.min_leaf_size = 1;
  utils::Rng rng(0);
  const auto grown = GrowTree(TrainingData(m), targets, params, rng);
  ASSERT_TRUE(grown.ok());
  EXPECT_EQ(grown->tree.NumLeaves(), 1);
  EXPECT_EQ(grown->leaf_of_row[1], -1);
  EXPECT_EQ(grown->tree.nodes()[0].num_rows, 2);
}

TEST(TreeParamsTest, Validate) {
  TreeParams p;
  EXPECT_TRUE(p.Validate().ok());
  p.max_depth = 0;
  EXPECT_FALSE(p.Validate().ok());
  p = TreeParams{};
  p.feature_subset_size = 0;
  EXPECT_FALSE(p.Validate().ok());
}

}  // namespace
}  // namespace idsbench::tree
