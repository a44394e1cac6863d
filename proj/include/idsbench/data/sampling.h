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

// Seeded sampling and partitioning of row indices. All outputs are sorted
// ascending and depend only on the inputs and the seed.

#ifndef IDSBENCH_DATA_SAMPLING_H_
#define IDSBENCH_DATA_SAMPLING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "idsbench/data/dataset.h"

namespace idsbench::data {

struct SplitPlan {
  enum class Kind { kHoldout, kKFold };

  Kind kind = Kind::kHoldout;
  double train_fraction = 0.6;
  int k = 10;
  uint64_t seed = 0;
  // Splits per repeat, and repeats with independent seeds.
  int rounds = 100;
  int repeats = 10;
  // Class-stratified hold-out splits instead of a plain shuffle.
  bool stratified = false;

  absl::Status Validate() const;
};

struct IndexSplit {
  std::vector<size_t> train;
  std::vector<size_t> test;
};

// Row indices of a class-stratified sample without replacement.
absl::StatusOr<std::vector<size_t>> SampleStratifiedIndices(
    std::span<const BinaryLabel> labels, size_t n_normal, size_t n_attack,
    uint64_t seed);

// Dataset with exactly `n_normal` normal and `n_attack` attack rows, kept
// in their original order.
absl::StatusOr<Dataset> SampleStratified(const Dataset& ds, size_t n_normal,
                                         size_t n_attack, uint64_t seed);

// Shuffles [0, n) and puts the first round(train_fraction * n) indices in
// the training part.
absl::StatusOr<IndexSplit> SplitHoldout(size_t n, double train_fraction,
                                        uint64_t seed);

// As SplitHoldout, but each class is split separately with the same
// fraction.
absl::StatusOr<IndexSplit> SplitHoldoutStratified(
    std::span<const BinaryLabel> labels, double train_fraction, uint64_t seed);

// k folds of a shuffled [0, n); the first n % k folds hold one extra row.
// Element i has fold i as test part and the remaining rows as train part.
absl::StatusOr<std::vector<IndexSplit>> KFoldPartitions(size_t n, int k,
                                                        uint64_t seed);

}  // namespace idsbench::data

#endif  // IDSBENCH_DATA_SAMPLING_H_
