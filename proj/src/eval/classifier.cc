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

#include "idsbench/eval/classifier.h"

#include <cmath>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "idsbench/tree/cart.h"
#include "idsbench/utils/csv.h"
#include "idsbench/utils/status_macros.h"

namespace idsbench::eval {
namespace {

using model::ModelKind;

absl::Status BadValue(absl::string_view key, absl::string_view value) {
  return absl::InvalidArgumentError(
      absl::StrCat("invalid value '", value, "' for parameter ", key));
}

absl::Status ParseInto(absl::string_view key, absl::string_view value, int* out) {
  if (!absl::SimpleAtoi(value, out)) return BadValue(key, value);
  return absl::OkStatus();
}

absl::Status ParseInto(absl::string_view key, absl::string_view value,
                       int64_t* out) {
  if (!absl::SimpleAtoi(value, out)) return BadValue(key, value);
  return absl::OkStatus();
}

absl::Status ParseInto(absl::string_view key, absl::string_view value,
                       double* out) {
  if (!absl::SimpleAtod(value, out) || !std::isfinite(*out)) {
    return BadValue(key, value);
  }
  return absl::OkStatus();
}

absl::Status ParseInto(absl::string_view key, absl::string_view value, bool* out) {
  if (!absl::SimpleAtob(value, out)) return BadValue(key, value);
  return absl::OkStatus();
}

absl::Status ParseInto(absl::string_view key, absl::string_view value,
                       std::optional<int>* out) {
  if (absl::EqualsIgnoreCase(value, "auto") || value.empty()) {
    out->reset();
    return absl::OkStatus();
  }
  int v;
  RETURN_IF_ERROR(ParseInto(key, value, &v));
  *out = v;
  return absl::OkStatus();
}

absl::Status UnknownKey(ModelKind kind, absl::string_view key) {
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown parameter '", key, "' for ", model::ModelKindName(kind)));
}

absl::Status SetParam(ModelKind kind, tree::TreeParams& p, absl::string_view key,
                      absl::string_view value) {
  if (key == "max_depth") return ParseInto(key, value, &p.max_depth);
  if (key == "min_leaf_size") return ParseInto(key, value, &p.min_leaf_size);
  if (key == "min_split_size") return ParseInto(key, value, &p.min_split_size);
  if (key == "feature_subset_size") {
    return ParseInto(key, value, &p.feature_subset_size);
  }
  return UnknownKey(kind, key);
}

absl::Status SetParam(ModelKind kind, ensemble::ForestParams& p,
                      absl::string_view key, absl::string_view value) {
  if (key == "n_estimators") return ParseInto(key, value, &p.n_estimators);
  if (key == "max_depth") return ParseInto(key, value, &p.max_depth);
  if (key == "min_leaf_size") return ParseInto(key, value, &p.min_leaf_size);
  if (key == "min_split_size") return ParseInto(key, value, &p.min_split_size);
  if (key == "feature_subset_size") {
    return ParseInto(key, value, &p.feature_subset_size);
  }
  if (key == "bootstrap") return ParseInto(key, value, &p.bootstrap);
  if (key == "workers") return ParseInto(key, value, &p.workers);
  return UnknownKey(kind, key);
}

absl::Status SetParam(ModelKind kind, ensemble::AdaBoostParams& p,
                      absl::string_view key, absl::string_view value) {
  if (key == "n_estimators") return ParseInto(key, value, &p.n_estimators);
  if (key == "learning_rate") return ParseInto(key, value, &p.learning_rate);
  return UnknownKey(kind, key);
}

absl::Status SetParam(ModelKind kind, ensemble::GbmParams& p,
                      absl::string_view key, absl::string_view value) {
  if (key == "n_estimators") return ParseInto(key, value, &p.n_estimators);
  if (key == "max_depth") return ParseInto(key, value, &p.max_depth);
  if (key == "min_split_size") return ParseInto(key, value, &p.min_split_size);
  if (key == "min_leaf_size") return ParseInto(key, value, &p.min_leaf_size);
  if (key == "learning_rate") return ParseInto(key, value, &p.learning_rate);
  return UnknownKey(kind, key);
}

absl::Status SetParam(ModelKind kind, ensemble::RegularizedGbParams& p,
                      absl::string_view key, absl::string_view value) {
  if (key == "n_estimators") return ParseInto(key, value, &p.n_estimators);
  if (key == "max_depth") return ParseInto(key, value, &p.max_depth);
  if (key == "min_child_weight") {
    return ParseInto(key, value, &p.min_child_weight);
  }
  if (key == "gamma") return ParseInto(key, value, &p.gamma);
  if (key == "subsample") return ParseInto(key, value, &p.subsample);
  if (key == "lambda") return ParseInto(key, value, &p.lambda);
  if (key == "learning_rate") return ParseInto(key, value, &p.learning_rate);
  return UnknownKey(kind, key);
}

absl::Status SetParam(ModelKind kind, mlp::MlpParams& p, absl::string_view key,
                      absl::string_view value) {
  if (key == "hidden_size") return ParseInto(key, value, &p.hidden_size);
  if (key == "learning_rate") return ParseInto(key, value, &p.learning_rate);
  if (key == "max_iter") return ParseInto(key, value, &p.max_iter);
  if (key == "batch_size") return ParseInto(key, value, &p.batch_size);
  return UnknownKey(kind, key);
}

nlohmann::json SubsetJson(const std::optional<int>& k) {
  return k ? nlohmann::json(*k) : nlohmann::json("auto");
}

nlohmann::json ToJson(const tree::TreeParams& p) {
  return {{"max_depth", p.max_depth},
          {"min_leaf_size", p.min_leaf_size},
          {"min_split_size", p.min_split_size},
          {"feature_subset_size", SubsetJson(p.feature_subset_size)}};
}

// `workers` only changes speed and is left out.
nlohmann::json ToJson(const ensemble::ForestParams& p) {
  return {{"n_estimators", p.n_estimators},
          {"max_depth", p.max_depth},
          {"min_leaf_size", p.min_leaf_size},
          {"min_split_size", p.min_split_size},
          {"feature_subset_size", SubsetJson(p.feature_subset_size)},
          {"bootstrap", p.bootstrap}};
}

nlohmann::json ToJson(const ensemble::AdaBoostParams& p) {
  return {{"n_estimators", p.n_estimators}, {"learning_rate", p.learning_rate}};
}

nlohmann::json ToJson(const ensemble::GbmParams& p) {
  return {{"n_estimators", p.n_estimators},
          {"max_depth", p.max_depth},
          {"min_split_size", p.min_split_size},
          {"min_leaf_size", p.min_leaf_size},
          {"learning_rate", p.learning_rate}};
}

nlohmann::json ToJson(const ensemble::RegularizedGbParams& p) {
  return {{"n_estimators", p.n_estimators},
          {"max_depth", p.max_depth},
          {"min_child_weight", p.min_child_weight},
          {"gamma", p.gamma},
          {"subsample", p.subsample},
          {"lambda", p.lambda},
          {"learning_rate", p.learning_rate}};
}

nlohmann::json ToJson(const mlp::MlpParams& p) {
  return {{"hidden_size", p.hidden_size},
          {"learning_rate", p.learning_rate},
          {"max_iter", p.max_iter},
          {"batch_size", p.batch_size}};
}

std::string JsonScalarText(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return utils::FormatDouble(v.get<double>());
  return v.dump();
}

}  // namespace

ClassifierSpec ClassifierSpec::Default(ModelKind kind) {
  ClassifierSpec spec;
  spec.kind = kind;
  switch (kind) {
    case ModelKind::kCart:
      spec.params = tree::DefaultCartParams();
      break;
    case ModelKind::kRandomForest:
      spec.params = ensemble::RandomForestDefaults();
      break;
    case ModelKind::kExtraTrees:
      spec.params = ensemble::ExtraTreesDefaults();
      break;
    case ModelKind::kAdaBoost:
      spec.params = ensemble::AdaBoostParams();
      break;
    case ModelKind::kGbm:
      spec.params = ensemble::GbmParams();
      break;
    case ModelKind::kRegularizedGb:
      spec.params = ensemble::RegularizedGbParams();
      break;
    case ModelKind::kMlp:
      spec.params = mlp::MlpParams();
      break;
  }
  return spec;
}

ClassifierSpec ClassifierSpec::DeskScale(ModelKind kind) {
  ClassifierSpec spec = Default(kind);
  if (auto* forest = std::get_if<ensemble::ForestParams>(&spec.params)) {
    forest->n_estimators = kind == ModelKind::kRandomForest ? 100 : 200;
  }
  return spec;
}

absl::Status ClassifierSpec::Set(absl::string_view key, absl::string_view value) {
  const std::string k = absl::AsciiStrToLower(absl::StripAsciiWhitespace(key));
  const absl::string_view v = absl::StripAsciiWhitespace(value);
  return std::visit([&](auto& p) { return SetParam(kind, p, k, v); }, params);
}

nlohmann::json ClassifierSpec::ParamsToJson() const {
  return std::visit([](const auto& p) { return ToJson(p); }, params);
}

absl::Status ClassifierSpec::ParamsFromJson(const nlohmann::json& json) {
  if (!json.is_object()) {
    return absl::InvalidArgumentError("classifier params must be an object");
  }
  for (const auto& [key, value] : json.items()) {
    RETURN_IF_ERROR(Set(key, JsonScalarText(value)));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::unique_ptr<model::Model>> TrainClassifier(
    const ClassifierSpec& spec, const data::FeatureMatrix& train,
    uint64_t seed) {
  auto fit = [&]() -> absl::StatusOr<std::unique_ptr<model::Model>> {
    switch (spec.kind) {
      case ModelKind::kCart:
        return tree::FitCart(train, std::get<tree::TreeParams>(spec.params),
                             seed);
      case ModelKind::kRandomForest:
      case ModelKind::kExtraTrees:
        return ensemble::FitForest(
            train, std::get<ensemble::ForestParams>(spec.params), spec.kind,
            seed);
      case ModelKind::kAdaBoost:
        return ensemble::FitAdaBoost(
            train, std::get<ensemble::AdaBoostParams>(spec.params), seed);
      case ModelKind::kGbm:
        return ensemble::FitGbm(train, std::get<ensemble::GbmParams>(spec.params),
                                seed);
      case ModelKind::kRegularizedGb:
        return ensemble::FitRegularizedGb(
            train, std::get<ensemble::RegularizedGbParams>(spec.params), seed);
      case ModelKind::kMlp:
        return mlp::FitMlp(train, std::get<mlp::MlpParams>(spec.params), seed);
    }
    return absl::InternalError("unhandled model kind");
  };
  try {
    return fit();
  } catch (const std::bad_variant_access&) {
    return absl::InvalidArgumentError(absl::StrCat(
        "parameters do not belong to ", model::ModelKindName(spec.kind)));
  }
}

absl::StatusOr<std::unique_ptr<model::Model>> ModelFromJson(
    const nlohmann::json& envelope) {
  ASSIGN_OR_RETURN(const model::ModelHeader header,
                   model::ParseModelEnvelope(envelope));
  const nlohmann::json& body = envelope["model"];
  const size_t q = header.num_features;
  auto up = [](auto r) -> absl::StatusOr<std::unique_ptr<model::Model>> {
    if (!r.ok()) return r.status();
    return std::unique_ptr<model::Model>(*std::move(r));
  };
  switch (header.kind) {
    case ModelKind::kCart:
      return up(tree::CartModel::FromJson(body, q));
    case ModelKind::kRandomForest:
    case ModelKind::kExtraTrees:
      return up(ensemble::ForestModel::FromJson(header.kind, body, q));
    case ModelKind::kAdaBoost:
    case ModelKind::kGbm:
    case ModelKind::kRegularizedGb:
      return up(ensemble::BoostModel::FromJson(header.kind, body, q));
    case ModelKind::kMlp:
      return up(mlp::MlpModel::FromJson(body, q));
  }
  return absl::InternalError("unhandled model kind");
}

nlohmann::json ModelToJson(const model::Model& model,
                           const ClassifierSpec* spec) {
  nlohmann::json json = model::ModelEnvelope(model);
  if (spec) json["params"] = spec->ParamsToJson();
  return json;
}

absl::Status SaveModel(const model::Model& model,
                       const std::filesystem::path& path,
                       const ClassifierSpec* spec) {
  return utils::WriteFile(path, ModelToJson(model, spec).dump() + "\n");
}

absl::StatusOr<std::unique_ptr<model::Model>> LoadModel(
    const std::filesystem::path& path) {
  ASSIGN_OR_RETURN(const std::string text, utils::ReadFile(path));
  nlohmann::json json = nlohmann::json::parse(text, nullptr, false);
  if (json.is_discarded()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path.string(), " is not valid JSON"));
  }
  return ModelFromJson(json);
}

}  // namespace idsbench::eval
