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

// One-hidden-layer perceptron with logistic units:
//
//   score(x) = sigmoid(w2 . sigmoid(W1 x + b1) + b2)
//
// trained by mini-batch SGD on the mean LogLoss. Weights start uniform in
// +-sqrt(6 / (fan_in + fan_out)), biases at zero, and the row order is
// reshuffled every epoch from the seeded stream.

#ifndef IDSBENCH_MLP_MLP_H_
#define IDSBENCH_MLP_MLP_H_

#include <memory>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "idsbench/data/preprocess.h"
#include "idsbench/model/model.h"
#include "idsbench/utils/random.h"

namespace idsbench::mlp {

struct MlpParams {
  int hidden_size = 100;
  double learning_rate = 0.001;
  int max_iter = 200;
  int batch_size = 32;

  absl::Status Validate() const;
};

struct MlpWeights {
  size_t num_inputs = 0;
  size_t hidden_size = 0;
  // hidden_size x num_inputs, row-major.
  std::vector<double> w1;
  std::vector<double> b1;
  std::vector<double> w2;
  double b2 = 0.0;

  static MlpWeights Zeros(size_t num_inputs, size_t hidden_size);
  // Glorot-uniform weights drawn W1 row by row, then w2; zero biases.
  static MlpWeights GlorotInit(size_t num_inputs, size_t hidden_size,
                               utils::Rng& rng);

  // Number of parameters and flat access in the order w1, b1, w2, b2.
  size_t size() const;
  double& param(size_t i);
  double param(size_t i) const;

  // this += alpha * other; shapes must agree.
  void AddScaled(const MlpWeights& other, double alpha);

  bool AllFinite() const;
};

// Returns P(attack). `hidden`, if given, receives the hidden activations.
double Forward(const MlpWeights& w, std::span<const double> x,
               std::vector<double>* hidden = nullptr);

// Mean LogLoss over `rows` of `m`; if `grad` is non-null it receives the
// gradient of that loss (same shape as `w`).
double LossAndGradient(const MlpWeights& w, const data::FeatureMatrix& m,
                       std::span<const size_t> rows, MlpWeights* grad);

class MlpModel : public model::Model {
 public:
  explicit MlpModel(MlpWeights weights) : weights_(std::move(weights)) {}

  model::ModelKind kind() const override { return model::ModelKind::kMlp; }
  size_t num_features() const override { return weights_.num_inputs; }
  model::Prediction PredictUnchecked(std::span<const double> x) const override;
  // {"hidden_size", "w1": [...], "b1": [...], "w2": [...], "b2"}.
  nlohmann::json ToJson() const override;

  static absl::StatusOr<std::unique_ptr<MlpModel>> FromJson(
      const nlohmann::json& json, size_t num_features);

  const MlpWeights& weights() const { return weights_; }

 private:
  MlpWeights weights_;
};

struct MlpTrace {
  // Mean training LogLoss after every epoch.
  std::vector<double> epoch_loss;
};

absl::StatusOr<std::unique_ptr<MlpModel>> FitMlp(
    const data::FeatureMatrix& train, const MlpParams& params, uint64_t seed,
    MlpTrace* trace = nullptr);

}  // namespace idsbench::mlp

#endif  // IDSBENCH_MLP_MLP_H_
