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

// Encoding of raw datasets into dense [0, 1]-scaled feature matrices.
//
// Statistics are fitted on a training partition and re-applied unchanged to
// any other partition:
//  - categorical values get codes 1, 2, ... in order of first appearance;
//    values unseen during fitting get the reserved code 0. The matrix holds
//    code / dictionary_size.
//  - missing numeric values are replaced by the training median, then
//    min-max scaled with the training range. Constant columns become 0.
//    Test values outside the training range are not clipped.

#ifndef IDSBENCH_DATA_PREPROCESS_H_
#define IDSBENCH_DATA_PREPROCESS_H_

#include <optional>
#include <span>
#include <string>
#include "absl/strings/string_view.h"
#include <unordered_map>
#include <vector>

#include "absl/status/statusor.h"
#include "idsbench/data/dataset.h"
#include "json.hpp"

namespace idsbench::data {

// Row-major dense features with labels.
struct FeatureMatrix {
  size_t num_rows = 0;
  size_t num_features = 0;
  std::vector<double> values;
  std::vector<BinaryLabel> labels;
  std::vector<std::string> feature_names;

  double at(size_t row, size_t feature) const {
    return values[row * num_features + feature];
  }
  std::span<const double> Row(size_t row) const {
    return {values.data() + row * num_features, num_features};
  }
  size_t CountLabel(BinaryLabel label) const;

  // Rows at `indices`, in that order.
  FeatureMatrix Subset(std::span<const size_t> indices) const;
};

class Preprocessor {
 public:
  // Reserved code of categories not seen during fitting.
  static constexpr int kUnseenCode = 0;

  static Preprocessor Fit(const Dataset& train);

  absl::StatusOr<FeatureMatrix> Transform(const Dataset& ds) const;

  size_t num_features() const { return columns_.size(); }

  // Integer code of a categorical value of feature `feature`.
  int EncodeCategory(size_t feature, absl::string_view value) const;
  // Inverse of EncodeCategory; empty for kUnseenCode or out-of-range codes.
  std::optional<std::string> DecodeCategory(size_t feature, int code) const;

  nlohmann::json ToJson() const;
  static absl::StatusOr<Preprocessor> FromJson(const nlohmann::json& json);

 private:
  struct ColumnTransform {
    std::string name;
    bool categorical = false;
    // Code of dictionary[i] is i + 1.
    std::vector<std::string> dictionary;
    std::unordered_map<std::string, int> codes;
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
  };

  double TransformNumeric(const ColumnTransform& column, double value) const;

  std::vector<ColumnTransform> columns_;
};

}  // namespace idsbench::data

#endif  // IDSBENCH_DATA_PREPROCESS_H_
