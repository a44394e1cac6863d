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

#ifndef IDSBENCH_DATA_DATASET_H_
#define IDSBENCH_DATA_DATASET_H_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "idsbench/data/schema.h"

namespace idsbench::data {

// Raw values of one feature column. Numeric columns hold doubles with NaN
// for missing values; categorical columns hold the original strings.
struct FeatureColumn {
  std::string name;
  ColumnRole kind = ColumnRole::kNumeric;
  std::vector<double> numeric;
  std::vector<std::string> categorical;

  bool is_categorical() const { return kind == ColumnRole::kCategorical; }
  size_t size() const {
    return is_categorical() ? categorical.size() : numeric.size();
  }
};

// Immutable column-oriented table of raw feature values with binary labels.
// Copies share the schema.
class Dataset {
 public:
  Dataset() = default;

  // Fails if the columns do not match the schema's feature columns or their
  // lengths differ from the label count.
  static absl::StatusOr<Dataset> Create(DatasetSchema schema,
                                        std::vector<FeatureColumn> columns,
                                        std::vector<BinaryLabel> labels);

  const DatasetSchema& schema() const { return *schema_; }
  size_t num_rows() const { return labels_.size(); }
  size_t num_features() const { return columns_.size(); }
  const FeatureColumn& column(size_t i) const { return columns_[i]; }
  const std::vector<FeatureColumn>& columns() const { return columns_; }
  const std::vector<BinaryLabel>& labels() const { return labels_; }
  BinaryLabel label(size_t row) const { return labels_[row]; }

  size_t CountLabel(BinaryLabel label) const;

  // Rows at `indices`, in that order. Indices may repeat.
  Dataset Subset(std::span<const size_t> indices) const;

 private:
  std::shared_ptr<const DatasetSchema> schema_ =
      std::make_shared<DatasetSchema>();
  std::vector<FeatureColumn> columns_;
  std::vector<BinaryLabel> labels_;
};

}  // namespace idsbench::data

#endif  // IDSBENCH_DATA_DATASET_H_
