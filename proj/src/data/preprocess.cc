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

#include "idsbench/data/preprocess.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"

namespace idsbench::data {
namespace {

// Median of the non-missing values; 0 when all are missing.
double Median(const std::vector<double>& values) {
  std::vector<double> present;
  present.reserve(values.size());
  for (const double v : values) {
    if (!std::isnan(v)) present.push_back(v);
  }
  if (present.empty()) return 0.0;
  const size_t mid = present.size() / 2;
  std::nth_element(present.begin(), present.begin() + mid, present.end());
  const double upper = present[mid];
  if (present.size() % 2 == 1) return upper;
  const double lower = *std::max_element(present.begin(), present.begin() + mid);
  return lower + (upper - lower) / 2.0;
}

}  // namespace

size_t FeatureMatrix::CountLabel(BinaryLabel label) const {
  return static_cast<size_t>(std::count(labels.begin(), labels.end(), label));
}

FeatureMatrix FeatureMatrix::Subset(std::span<const size_t> indices) const {
  FeatureMatrix out;
  out.num_rows = indices.size();
  out.num_features = num_features;
  out.feature_names = feature_names;
  out.values.reserve(indices.size() * num_features);
  out.labels.reserve(indices.size());
  for (const size_t i : indices) {
    const auto row = Row(i);
    out.values.insert(out.values.end(), row.begin(), row.end());
    out.labels.push_back(labels[i]);
  }
  return out;
}

Preprocessor Preprocessor::Fit(const Dataset& train) {
  Preprocessor p;
  for (const FeatureColumn& column : train.columns()) {
    ColumnTransform& t = p.columns_.emplace_back();
    t.name = column.name;
    t.categorical = column.is_categorical();
    if (t.categorical) {
      for (const std::string& value : column.categorical) {
        if (t.codes.emplace(value, static_cast<int>(t.dictionary.size()) + 1)
                .second) {
          t.dictionary.push_back(value);
        }
      }
      continue;
    }
    t.median = Median(column.numeric);
    bool first = true;
    for (double v : column.numeric) {
      if (std::isnan(v)) v = t.median;
      if (first || v < t.min) t.min = v;
      if (first || v > t.max) t.max = v;
      first = false;
    }
  }
  return p;
}

double Preprocessor::TransformNumeric(const ColumnTransform& column,
                                      double value) const {
  if (std::isnan(value)) value = column.median;
  const double range = column.max - column.min;
  if (!(range > 0.0)) return 0.0;
  return (value - column.min) / range;
}

int Preprocessor::EncodeCategory(size_t feature, absl::string_view value) const {
  const auto& codes = columns_[feature].codes;
  const auto it = codes.find(std::string(value));
  return it == codes.end() ? kUnseenCode : it->second;
}

std::optional<std::string> Preprocessor::DecodeCategory(size_t feature,
                                                        int code) const {
  const auto& dictionary = columns_[feature].dictionary;
  if (code < 1 || static_cast<size_t>(code) > dictionary.size()) {
    return std::nullopt;
  }
  return dictionary[code - 1];
}

absl::StatusOr<FeatureMatrix> Preprocessor::Transform(const Dataset& ds) const {
  if (ds.num_features() != columns_.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("DimensionMismatch: preprocessor expects ",
                     columns_.size(), " features, dataset has ",
                     ds.num_features()));
  }
  FeatureMatrix m;
  m.num_rows = ds.num_rows();
  m.num_features = columns_.size();
  m.labels = ds.labels();
  m.values.resize(m.num_rows * m.num_features);
  for (size_t f = 0; f < columns_.size(); ++f) {
    const ColumnTransform& t = columns_[f];
    const FeatureColumn& column = ds.column(f);
    if (column.name != t.name || column.is_categorical() != t.categorical) {
      return absl::InvalidArgumentError(absl::StrCat(
          "SchemaMismatch: feature ", f, " is '", column.name,
          "', preprocessor was fitted on '", t.name, "'"));
    }
    m.feature_names.push_back(t.name);
    const double dictionary_size = static_cast<double>(t.dictionary.size());
    for (size_t r = 0; r < m.num_rows; ++r) {
      double value;
      if (t.categorical) {
        const int code = EncodeCategory(f, column.categorical[r]);
        value = code == kUnseenCode ? 0.0 : code / dictionary_size;
      } else {
        value = TransformNumeric(t, column.numeric[r]);
      }
      m.values[r * m.num_features + f] = value;
    }
  }
  return m;
}

nlohmann::json Preprocessor::ToJson() const {
  nlohmann::json columns = nlohmann::json::array();
  for (const ColumnTransform& t : columns_) {
    nlohmann::json c;
    c["name"] = t.name;
    if (t.categorical) {
      c["kind"] = "categorical";
      c["dictionary"] = t.dictionary;
    } else {
      c["kind"] = "numeric";
      c["median"] = t.median;
      c["min"] = t.min;
      c["max"] = t.max;
    }
    columns.push_back(std::move(c));
  }
  return {{"columns", std::move(columns)}};
}

absl::StatusOr<Preprocessor> Preprocessor::FromJson(const nlohmann::json& json) {
  Preprocessor p;
  try {
    for (const auto& c : json.at("columns")) {
      ColumnTransform& t = p.columns_.emplace_back();
      t.name = c.at("name").get<std::string>();
      const std::string kind = c.at("kind").get<std::string>();
      if (kind == "categorical") {
        t.categorical = true;
        t.dictionary = c.at("dictionary").get<std::vector<std::string>>();
        for (size_t i = 0; i < t.dictionary.size(); ++i) {
          t.codes.emplace(t.dictionary[i], static_cast<int>(i) + 1);
        }
      } else if (kind == "numeric") {
        t.median = c.at("median").get<double>();
        t.min = c.at("min").get<double>();
        t.max = c.at("max").get<double>();
      } else {
        return absl::InvalidArgumentError(
            absl::StrCat("unknown column kind '", kind, "'"));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed preprocessor: ", e.what()));
  }
  return p;
}

}  // namespace idsbench::data
