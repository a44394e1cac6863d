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

#include "idsbench/data/dataset.h"

#include <algorithm>

#include "absl/strings/str_cat.h"

namespace idsbench::data {

absl::StatusOr<Dataset> Dataset::Create(DatasetSchema schema,
                                        std::vector<FeatureColumn> columns,
                                        std::vector<BinaryLabel> labels) {
  const std::vector<size_t> feature_indices = schema.FeatureColumns();
  if (feature_indices.size() != columns.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("schema ", schema.name, " has ", feature_indices.size(),
                     " features, got ", columns.size(), " columns"));
  }
  for (size_t i = 0; i < columns.size(); ++i) {
    const ColumnSpec& spec = schema.columns[feature_indices[i]];
    if (columns[i].name != spec.name || columns[i].kind != spec.role) {
      return absl::InvalidArgumentError(absl::StrCat(
          "column ", i, " is '", columns[i].name, "', schema expects '",
          spec.name, "'"));
    }
    if (columns[i].size() != labels.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("column '", columns[i].name, "' has ",
                       columns[i].size(), " values for ", labels.size(),
                       " labels"));
    }
  }
  for (const BinaryLabel label : labels) {
    if (label != kNormal && label != kAttack) {
      return absl::InvalidArgumentError("labels must be 0 or 1");
    }
  }
  Dataset ds;
  ds.schema_ = std::make_shared<const DatasetSchema>(std::move(schema));
  ds.columns_ = std::move(columns);
  ds.labels_ = std::move(labels);
  return ds;
}

size_t Dataset::CountLabel(BinaryLabel label) const {
  return static_cast<size_t>(std::count(labels_.begin(), labels_.end(), label));
}

Dataset Dataset::Subset(std::span<const size_t> indices) const {
  Dataset out;
  out.schema_ = schema_;
  out.columns_.reserve(columns_.size());
  for (const FeatureColumn& column : columns_) {
    FeatureColumn& copy = out.columns_.emplace_back();
    copy.name = column.name;
    copy.kind = column.kind;
    if (column.is_categorical()) {
      copy.categorical.reserve(indices.size());
      for (const size_t i : indices) copy.categorical.push_back(column.categorical[i]);
    } else {
      copy.numeric.reserve(indices.size());
      for (const size_t i : indices) copy.numeric.push_back(column.numeric[i]);
    }
  }
  out.labels_.reserve(indices.size());
  for (const size_t i : indices) out.labels_.push_back(labels_[i]);
  return out;
}

}  // namespace idsbench::data
