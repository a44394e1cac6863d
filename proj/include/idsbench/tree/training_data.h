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

#ifndef IDSBENCH_TREE_TRAINING_DATA_H_
#define IDSBENCH_TREE_TRAINING_DATA_H_

#include <cstdint>
#include <span>
#include <vector>

#include "idsbench/data/preprocess.h"

namespace idsbench::tree {

// Column-major copy of a feature matrix with, per feature, the row indices
// sorted by value (ties by row index). Built once and shared by all trees
// of an ensemble.
class TrainingData {
 public:
  explicit TrainingData(const data::FeatureMatrix& m);

  size_t num_rows() const { return num_rows_; }
  size_t num_features() const { return num_features_; }

  double value(size_t row, size_t feature) const {
    return columns_[feature * num_rows_ + row];
  }
  std::span<const double> column(size_t feature) const {
    return {columns_.data() + feature * num_rows_, num_rows_};
  }
  std::span<const uint32_t> sorted_rows(size_t feature) const {
    return {sorted_.data() + feature * num_rows_, num_rows_};
  }
  const std::vector<data::BinaryLabel>& labels() const { return labels_; }

 private:
  size_t num_rows_ = 0;
  size_t num_features_ = 0;
  std::vector<double> columns_;
  std::vector<uint32_t> sorted_;
  std::vector<data::BinaryLabel> labels_;
};

}  // namespace idsbench::tree

#endif  // IDSBENCH_TREE_TRAINING_DATA_H_
