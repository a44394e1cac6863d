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

// Additive tree ensembles built stage by stage.
//
// AdaBoost: each stage is a stump voting c(x) = +1 (attack) or -1 (normal)
// with weight beta. The margin is sum beta * c(x); the score maps it to
// [0, 1] as (1 + margin / sum beta) / 2.
//
// Gradient boosting (GBM and the regularized variant): leaves hold real
// values and score = sigmoid(base_score + learning_rate * sum f(x)).

#ifndef IDSBENCH_ENSEMBLE_BOOST_MODEL_H_
#define IDSBENCH_ENSEMBLE_BOOST_MODEL_H_

#include <memory>
#include <vector>

#include "absl/status/statusor.h"
#include "idsbench/data/preprocess.h"
#include "idsbench/model/model.h"
#include "idsbench/tree/tree.h"

namespace idsbench::ensemble {

struct BoostStage {
  tree::DecisionTree tree;
  // AdaBoost beta; 1 for gradient boosting stages.
  double weight = 1.0;
};

class BoostModel : public model::Model {
 public:
  BoostModel(model::ModelKind kind, size_t num_features, double learning_rate,
             double base_score, std::vector<BoostStage> stages)
      : kind_(kind),
        num_features_(num_features),
        learning_rate_(learning_rate),
        base_score_(base_score),
        stages_(std::move(stages)) {}

  model::ModelKind kind() const override { return kind_; }
  size_t num_features() const override { return num_features_; }
  model::Prediction PredictUnchecked(std::span<const double> x) const override;
  nlohmann::json ToJson() const override;

  static absl::StatusOr<std::unique_ptr<BoostModel>> FromJson(
      model::ModelKind kind, const nlohmann::json& json, size_t num_features);

  // AdaBoost: sum beta * c(x). Gradient boosting: the raw log-odds.
  double Margin(std::span<const double> x) const;

  const std::vector<BoostStage>& stages() const { return stages_; }
  double learning_rate() const { return learning_rate_; }
  double base_score() const { return base_score_; }

 private:
  model::ModelKind kind_;
  size_t num_features_;
  double learning_rate_;
  double base_score_;
  std::vector<BoostStage> stages_;
};

// Fails with SingleClassTrainingSet unless both classes are present.
absl::Status CheckBothClasses(const data::FeatureMatrix& train);

}  // namespace idsbench::ensemble

#endif  // IDSBENCH_ENSEMBLE_BOOST_MODEL_H_
