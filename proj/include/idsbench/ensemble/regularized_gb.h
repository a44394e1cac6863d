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

// Second-order gradient boosting with a regularized objective
// gamma * (number of leaves) + lambda / 2 * sum(w^2), in the style of
// XGBoost.
//
// Each stage draws round(subsample * n) rows without replacement, computes
// g = p - y and h = p (1 - p) on them and grows a tree whose leaves hold
// w* = -G / (H + lambda). A split is kept only if
//   1/2 [G_L^2/(H_L+lambda) + G_R^2/(H_R+lambda) - G^2/(H+lambda)] - gamma
// is positive and both children have H >= min_child_weight.

#ifndef IDSBENCH_ENSEMBLE_REGULARIZED_GB_H_
#define IDSBENCH_ENSEMBLE_REGULARIZED_GB_H_

#include <memory>
#include <vector>

#include "absl/status/statusor.h"
#include "idsbench/ensemble/boost_model.h"

namespace idsbench::ensemble {

struct RegularizedGbParams {
  int n_estimators = 100;
  int max_depth = 8;
  double min_child_weight = 1.0;
  double gamma = 2.0;
  double subsample = 0.6;
  double lambda = 1.0;
  double learning_rate = 0.3;
};

struct RegularizedGbTrace {
  struct Stage {
    // Rows drawn for the stage, in draw order.
    std::vector<size_t> sample;
    // Indexed by training row; only sampled rows are meaningful.
    std::vector<double> gradients;
    std::vector<double> hessians;
  };
  std::vector<Stage> stages;
  // Mean training LogLoss of the initial model and after every stage.
  std::vector<double> train_loss;
};

// Leaf weight -G / (H + lambda).
double RegularizedLeafWeight(double g_sum, double h_sum, double lambda);

// Split gain of the regularized objective (see file comment).
double RegularizedSplitGain(double g_left, double h_left, double g_right,
                            double h_right, double lambda, double gamma);

absl::StatusOr<std::unique_ptr<BoostModel>> FitRegularizedGb(
    const data::FeatureMatrix& train, const RegularizedGbParams& params,
    uint64_t seed, RegularizedGbTrace* trace = nullptr);

}  // namespace idsbench::ensemble

#endif  // IDSBENCH_ENSEMBLE_REGULARIZED_GB_H_
