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

#include "idsbench/tree/training_data.h"

#include <algorithm>
#include <numeric>

namespace idsbench::tree {

TrainingData::TrainingData(const data::FeatureMatrix& m)
    : num_rows_(m.num_rows),
      num_features_(m.num_features),
      columns_(m.num_rows * m.num_features),
      sorted_(m.num_rows * m.num_features),
      labels_(m.labels) {
  for (size_t r = 0; r < num_rows_; ++r) {
    for (size_t f = 0; f < num_features_; ++f) {
      columns_[f * num_rows_ + r] = m.at(r, f);
    }
  }
  for (size_t f = 0; f < num_features_; ++f) {
    const double* col = columns_.data() + f * num_rows_;
    uint32_t* order = sorted_.data() + f * num_rows_;
    std::iota(order, order + num_rows_, 0u);
    std::stable_sort(order, order + num_rows_,
                     [col](uint32_t a, uint32_t b) { return col[a] < col[b]; });
  }
}

}  // namespace idsbench::tree
