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

// A classifier kind with its hyperparameters, and the single entry point
// that trains, saves and loads any of the seven model kinds.

#ifndef IDSBENCH_EVAL_CLASSIFIER_H_
#define IDSBENCH_EVAL_CLASSIFIER_H_

#include <filesystem>
#include <memory>
#include <string>
#include <variant>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "idsbench/data/preprocess.h"
#include "idsbench/ensemble/adaboost.h"
#include "idsbench/ensemble/forest.h"
#include "idsbench/ensemble/gbm.h"
#include "idsbench/ensemble/regularized_gb.h"
#include "idsbench/mlp/mlp.h"
#include "idsbench/model/model.h"
#include "idsbench/tree/tree.h"
#include "json.hpp"

namespace idsbench::eval {

using ClassifierParams =
    std::variant<tree::TreeParams, ensemble::ForestParams,
                 ensemble::AdaBoostParams, ensemble::GbmParams,
                 ensemble::RegularizedGbParams, mlp::MlpParams>;

struct ClassifierSpec {
  model::ModelKind kind = model::ModelKind::kCart;
  ClassifierParams params;

  // The benchmark hyperparameters of each kind.
  static ClassifierSpec Default(model::ModelKind kind);

  // Default() with RF cut to 100 trees and ETC to 200 trees.
  static ClassifierSpec DeskScale(model::ModelKind kind);

  // Sets one hyperparameter from text, e.g. ("n_estimators", "100").
  // Keys: max_depth, min_leaf_size, min_split_size, feature_subset_size
  // ("auto" resets it), n_estimators, bootstrap, workers, learning_rate,
  // min_child_weight, gamma, lambda, subsample, hidden_size, max_iter,
  // batch_size. Unknown keys for the kind are errors.
  absl::Status Set(absl::string_view key, absl::string_view value);

  // Kind-specific hyperparameters; ParamsFromJson accepts the same object.
  nlohmann::json ParamsToJson() const;
  absl::Status ParamsFromJson(const nlohmann::json& json);

  std::string Name() const { return std::string(model::ModelKindName(kind)); }
};

absl::StatusOr<std::unique_ptr<model::Model>> TrainClassifier(
    const ClassifierSpec& spec, const data::FeatureMatrix& train,
    uint64_t seed);

// Rebuilds a model from its envelope (see model.h).
absl::StatusOr<std::unique_ptr<model::Model>> ModelFromJson(
    const nlohmann::json& envelope);

// Envelope plus, if `spec` is given, a "params" block.
nlohmann::json ModelToJson(const model::Model& model,
                           const ClassifierSpec* spec = nullptr);

absl::Status SaveModel(const model::Model& model,
                       const std::filesystem::path& path,
                       const ClassifierSpec* spec = nullptr);
absl::StatusOr<std::unique_ptr<model::Model>> LoadModel(
    const std::filesystem::path& path);

}  // namespace idsbench::eval

#endif  // IDSBENCH_EVAL_CLASSIFIER_H_
