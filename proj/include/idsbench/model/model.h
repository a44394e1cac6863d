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

// Common interface of trained binary classifiers.
//
// Models are immutable once trained and safe to use from several threads.
// They serialize to a JSON envelope
//
//   {"format": "idsbench-model", "version": 1, "kind": "<kind>",
//    "num_features": q, "model": {...}}
//
// whose "model" block is defined by each model kind.

#ifndef IDSBENCH_MODEL_MODEL_H_
#define IDSBENCH_MODEL_MODEL_H_

#include <memory>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "idsbench/data/preprocess.h"
#include "idsbench/data/schema.h"
#include "json.hpp"

namespace idsbench::model {

enum class ModelKind {
  kCart,
  kRandomForest,
  kExtraTrees,
  kAdaBoost,
  kGbm,
  kRegularizedGb,
  kMlp,
};

// Short names: CART, RF, ETC, AB, GBM, XGB, MLP.
absl::string_view ModelKindName(ModelKind kind);
absl::StatusOr<ModelKind> ParseModelKind(absl::string_view name);

struct Prediction {
  data::BinaryLabel label = data::kNormal;
  // Estimated probability of the attack class.
  double score = 0.0;
};

// Label for a score under the 0.5 decision threshold (0.5 itself is normal).
inline data::BinaryLabel LabelFromScore(double score) {
  return score > 0.5 ? data::kAttack : data::kNormal;
}

class Model {
 public:
  virtual ~Model() = default;

  virtual ModelKind kind() const = 0;
  virtual size_t num_features() const = 0;

  // `x` must hold num_features() values.
  virtual Prediction PredictUnchecked(std::span<const double> x) const = 0;

  // Kind-specific body of the serialized model.
  virtual nlohmann::json ToJson() const = 0;

  // Fails with DimensionMismatch if `x` has the wrong size.
  absl::StatusOr<Prediction> Predict(std::span<const double> x) const;

  absl::StatusOr<std::vector<Prediction>> PredictAll(
      const data::FeatureMatrix& m) const;
};

inline constexpr absl::string_view kModelFormat = "idsbench-model";
inline constexpr int kModelFormatVersion = 1;

// Wraps a model's body into the common envelope.
nlohmann::json ModelEnvelope(const Model& model);

struct ModelHeader {
  ModelKind kind = ModelKind::kCart;
  size_t num_features = 0;
};

// Checks the envelope and returns its header. The body is json["model"].
absl::StatusOr<ModelHeader> ParseModelEnvelope(const nlohmann::json& json);

absl::Status DimensionMismatch(size_t expected, size_t actual);

}  // namespace idsbench::model

#endif  // IDSBENCH_MODEL_MODEL_H_
