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

#include "idsbench/model/model.h"

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"

namespace idsbench::model {
namespace {

constexpr std::pair<ModelKind, absl::string_view> kKindNames[] = {
    {ModelKind::kCart, "CART"},         {ModelKind::kRandomForest, "RF"},
    {ModelKind::kExtraTrees, "ETC"},    {ModelKind::kAdaBoost, "AB"},
    {ModelKind::kGbm, "GBM"},           {ModelKind::kRegularizedGb, "XGB"},
    {ModelKind::kMlp, "MLP"},
};

}  // namespace

absl::string_view ModelKindName(ModelKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "UNKNOWN";
}

absl::StatusOr<ModelKind> ParseModelKind(absl::string_view name) {
  for (const auto& [kind, kind_name] : kKindNames) {
    if (absl::EqualsIgnoreCase(name, kind_name)) return kind;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown classifier kind '", name,
                   "' (expected CART, RF, ETC, AB, GBM, XGB or MLP)"));
}

absl::Status DimensionMismatch(size_t expected, size_t actual) {
  return absl::InvalidArgumentError(
      absl::StrCat("DimensionMismatch: model expects ", expected,
                   " features, got ", actual));
}

absl::StatusOr<Prediction> Model::Predict(std::span<const double> x) const {
  if (x.size() != num_features()) return DimensionMismatch(num_features(), x.size());
  return PredictUnchecked(x);
}

absl::StatusOr<std::vector<Prediction>> Model::PredictAll(
    const data::FeatureMatrix& m) const {
  if (m.num_features != num_features()) {
    return DimensionMismatch(num_features(), m.num_features);
  }
  std::vector<Prediction> out;
  out.reserve(m.num_rows);
  for (size_t i = 0; i < m.num_rows; ++i) out.push_back(PredictUnchecked(m.Row(i)));
  return out;
}

nlohmann::json ModelEnvelope(const Model& model) {
  nlohmann::json json;
  json["format"] = std::string(kModelFormat);
  json["version"] = kModelFormatVersion;
  json["kind"] = std::string(ModelKindName(model.kind()));
  json["num_features"] = model.num_features();
  json["model"] = model.ToJson();
  return json;
}

absl::StatusOr<ModelHeader> ParseModelEnvelope(const nlohmann::json& json) {
  if (!json.is_object() || !json.contains("format") ||
      json["format"] != std::string(kModelFormat)) {
    return absl::InvalidArgumentError("not an idsbench model file");
  }
  if (!json.contains("version") || json["version"] != kModelFormatVersion) {
    return absl::InvalidArgumentError("unsupported model file version");
  }
  if (!json.contains("kind") || !json["kind"].is_string() ||
      !json.contains("num_features") || !json.contains("model")) {
    return absl::InvalidArgumentError("incomplete model file");
  }
  auto kind = ParseModelKind(json["kind"].get<std::string>());
  if (!kind.ok()) return kind.status();
  return ModelHeader{*kind, json["num_features"].get<size_t>()};
}

}  // namespace idsbench::model
