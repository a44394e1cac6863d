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

#include "idsbench/mlp/mlp.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "idsbench/model/loss.h"
#include "idsbench/utils/status_macros.h"

namespace idsbench::mlp {

absl::Status MlpParams::Validate() const {
  if (hidden_size < 1) {
    return absl::InvalidArgumentError("hidden_size must be >= 1");
  }
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    return absl::InvalidArgumentError("learning_rate must be positive");
  }
  if (max_iter < 0) return absl::InvalidArgumentError("max_iter must be >= 0");
  if (batch_size < 1) {
    return absl::InvalidArgumentError("batch_size must be >= 1");
  }
  return absl::OkStatus();
}

MlpWeights MlpWeights::Zeros(size_t num_inputs, size_t hidden_size) {
  MlpWeights w;
  w.num_inputs = num_inputs;
  w.hidden_size = hidden_size;
  w.w1.assign(num_inputs * hidden_size, 0.0);
  w.b1.assign(hidden_size, 0.0);
  w.w2.assign(hidden_size, 0.0);
  return w;
}

MlpWeights MlpWeights::GlorotInit(size_t num_inputs, size_t hidden_size,
                                  utils::Rng& rng) {
  MlpWeights w = Zeros(num_inputs, hidden_size);
  const double limit1 =
      std::sqrt(6.0 / static_cast<double>(num_inputs + hidden_size));
  for (double& v : w.w1) v = limit1 * (2.0 * utils::UniformUnit(rng) - 1.0);
  const double limit2 = std::sqrt(6.0 / static_cast<double>(hidden_size + 1));
  for (double& v : w.w2) v = limit2 * (2.0 * utils::UniformUnit(rng) - 1.0);
  return w;
}

size_t MlpWeights::size() const {
  return w1.size() + b1.size() + w2.size() + 1;
}

double& MlpWeights::param(size_t i) {
  if (i < w1.size()) return w1[i];
  i -= w1.size();
  if (i < b1.size()) return b1[i];
  i -= b1.size();
  if (i < w2.size()) return w2[i];
  return b2;
}

double MlpWeights::param(size_t i) const {
  return const_cast<MlpWeights*>(this)->param(i);
}

void MlpWeights::AddScaled(const MlpWeights& other, double alpha) {
  for (size_t i = 0; i < w1.size(); ++i) w1[i] += alpha * other.w1[i];
  for (size_t i = 0; i < b1.size(); ++i) b1[i] += alpha * other.b1[i];
  for (size_t i = 0; i < w2.size(); ++i) w2[i] += alpha * other.w2[i];
  b2 += alpha * other.b2;
}

bool MlpWeights::AllFinite() const {
  auto finite = [](double v) { return std::isfinite(v); };
  return std::all_of(w1.begin(), w1.end(), finite) &&
         std::all_of(b1.begin(), b1.end(), finite) &&
         std::all_of(w2.begin(), w2.end(), finite) && std::isfinite(b2);
}

double Forward(const MlpWeights& w, std::span<const double> x,
               std::vector<double>* hidden) {
  double z2 = w.b2;
  if (hidden) hidden->resize(w.hidden_size);
  for (size_t j = 0; j < w.hidden_size; ++j) {
    const double* row = &w.w1[j * w.num_inputs];
    double z = w.b1[j];
    for (size_t i = 0; i < w.num_inputs; ++i) z += row[i] * x[i];
    const double a = model::Sigmoid(z);
    if (hidden) (*hidden)[j] = a;
    z2 += w.w2[j] * a;
  }
  return model::Sigmoid(z2);
}

double LossAndGradient(const MlpWeights& w, const data::FeatureMatrix& m,
                       std::span<const size_t> rows, MlpWeights* grad) {
  if (grad) *grad = MlpWeights::Zeros(w.num_inputs, w.hidden_size);
  if (rows.empty()) return 0.0;
  std::vector<double> hidden;
  double loss = 0.0;
  for (const size_t r : rows) {
    const std::span<const double> x = m.Row(r);
    const double p = Forward(w, x, &hidden);
    const uint8_t y = m.labels[r];
    loss += model::LogLoss(p, y);
    if (!grad) continue;
    const double delta2 = p - static_cast<double>(y);
    grad->b2 += delta2;
    for (size_t j = 0; j < w.hidden_size; ++j) {
      const double a = hidden[j];
      grad->w2[j] += delta2 * a;
      const double delta1 = delta2 * w.w2[j] * a * (1.0 - a);
      grad->b1[j] += delta1;
      double* row = &grad->w1[j * w.num_inputs];
      for (size_t i = 0; i < w.num_inputs; ++i) row[i] += delta1 * x[i];
    }
  }
  const double scale = 1.0 / static_cast<double>(rows.size());
  if (grad) {
    MlpWeights zero = MlpWeights::Zeros(w.num_inputs, w.hidden_size);
    zero.AddScaled(*grad, scale);
    *grad = std::move(zero);
  }
  return loss * scale;
}

model::Prediction MlpModel::PredictUnchecked(std::span<const double> x) const {
  const double score = Forward(weights_, x);
  return {model::LabelFromScore(score), score};
}

nlohmann::json MlpModel::ToJson() const {
  return {{"hidden_size", weights_.hidden_size},
          {"w1", weights_.w1},
          {"b1", weights_.b1},
          {"w2", weights_.w2},
          {"b2", weights_.b2}};
}

absl::StatusOr<std::unique_ptr<MlpModel>> MlpModel::FromJson(
    const nlohmann::json& json, size_t num_features) {
  MlpWeights w;
  try {
    w.num_inputs = num_features;
    w.hidden_size = json.at("hidden_size").get<size_t>();
    w.w1 = json.at("w1").get<std::vector<double>>();
    w.b1 = json.at("b1").get<std::vector<double>>();
    w.w2 = json.at("w2").get<std::vector<double>>();
    w.b2 = json.at("b2").get<double>();
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed MLP model: ", e.what()));
  }
  if (w.hidden_size < 1 || w.w1.size() != w.hidden_size * num_features ||
      w.b1.size() != w.hidden_size || w.w2.size() != w.hidden_size) {
    return absl::InvalidArgumentError(absl::StrCat(
        "MLP weight blocks do not match hidden_size ", w.hidden_size,
        " and ", num_features, " inputs"));
  }
  if (!w.AllFinite()) {
    return absl::InvalidArgumentError("MLP weights must be finite");
  }
  return std::make_unique<MlpModel>(std::move(w));
}

absl::StatusOr<std::unique_ptr<MlpModel>> FitMlp(
    const data::FeatureMatrix& train, const MlpParams& params, uint64_t seed,
    MlpTrace* trace) {
  RETURN_IF_ERROR(params.Validate());
  if (train.num_rows == 0) {
    return absl::InvalidArgumentError("EmptyTrainingSet: no training rows");
  }
  utils::Rng rng(seed);
  MlpWeights w = MlpWeights::GlorotInit(
      train.num_features, static_cast<size_t>(params.hidden_size), rng);
  std::vector<size_t> order(train.num_rows);
  std::iota(order.begin(), order.end(), size_t{0});
  const size_t batch = static_cast<size_t>(params.batch_size);
  MlpWeights grad;

  for (int epoch = 0; epoch < params.max_iter; ++epoch) {
    utils::Shuffle(std::span<size_t>(order), rng);
    double loss_sum = 0.0;
    for (size_t start = 0; start < order.size(); start += batch) {
      const size_t len = std::min(batch, order.size() - start);
      const std::span<const size_t> rows(order.data() + start, len);
      loss_sum += LossAndGradient(w, train, rows, &grad) * static_cast<double>(len);
      w.AddScaled(grad, -params.learning_rate);
    }
    const double epoch_loss = loss_sum / static_cast<double>(order.size());
    if (!std::isfinite(epoch_loss) || !w.AllFinite()) {
      return absl::InternalError(
          absl::StrCat("MLP training diverged at epoch ", epoch + 1));
    }
    if (trace) trace->epoch_loss.push_back(epoch_loss);
  }
  return std::make_unique<MlpModel>(std::move(w));
}

}  // namespace idsbench::mlp
