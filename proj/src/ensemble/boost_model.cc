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

#include "idsbench/ensemble/boost_model.h"

#include "absl/strings/str_cat.h"
#include "idsbench/model/loss.h"

namespace idsbench::ensemble {

absl::Status CheckBothClasses(const data::FeatureMatrix& train) {
  if (train.num_rows == 0) {
    return absl::InvalidArgumentError("EmptyTrainingSet: no training rows");
  }
  const size_t attacks = train.CountLabel(data::kAttack);
  if (attacks == 0 || attacks == train.num_rows) {
    return absl::FailedPreconditionError(absl::StrCat(
        "SingleClassTrainingSet: all ", train.num_rows, " rows are ",
        attacks == 0 ? "normal" : "attack"));
  }
  return absl::OkStatus();
}

double BoostModel::Margin(std::span<const double> x) const {
  if (kind_ == model::ModelKind::kAdaBoost) {
    double margin = 0.0;
    for (const BoostStage& stage : stages_) {
      margin += stage.tree.LeafLabel(x) ? stage.weight : -stage.weight;
    }
    return margin;
  }
  double sum = 0.0;
  for (const BoostStage& stage : stages_) sum += stage.tree.LeafScore(x);
  return base_score_ + learning_rate_ * sum;
}

model::Prediction BoostModel::PredictUnchecked(std::span<const double> x) const {
  const double margin = Margin(x);
  double score;
  if (kind_ == model::ModelKind::kAdaBoost) {
    double total = 0.0;
    for (const BoostStage& stage : stages_) total += stage.weight;
    score = total > 0.0 ? 0.5 * (1.0 + margin / total) : 0.5;
  } else {
    score = model::Sigmoid(margin);
  }
  return {model::LabelFromScore(score), score};
}

nlohmann::json BoostModel::ToJson() const {
  nlohmann::json stages = nlohmann::json::array();
  for (const BoostStage& stage : stages_) {
    stages.push_back({{"weight", stage.weight}, {"tree", stage.tree.ToJson()}});
  }
  return {{"learning_rate", learning_rate_},
          {"base_score", base_score_},
          {"stages", std::move(stages)}};
}

absl::StatusOr<std::unique_ptr<BoostModel>> BoostModel::FromJson(
    model::ModelKind kind, const nlohmann::json& json, size_t num_features) {
  std::vector<BoostStage> stages;
  double learning_rate, base_score;
  try {
    learning_rate = json.at("learning_rate").get<double>();
    base_score = json.at("base_score").get<double>();
    for (const auto& s : json.at("stages")) {
      auto tree = tree::DecisionTree::FromJson(s.at("tree"), num_features);
      if (!tree.ok()) return tree.status();
      stages.push_back({*std::move(tree), s.at("weight").get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed boosting model: ", e.what()));
  }
  return std::make_unique<BoostModel>(kind, num_features, learning_rate,
                                      base_score, std::move(stages));
}

}  // namespace idsbench::ensemble
