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

#include "idsbench/data/sampling.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "idsbench/utils/random.h"

namespace idsbench::data {
namespace {

absl::Status CheckFraction(double train_fraction) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("train_fraction must be in (0, 1), got ", train_fraction));
  }
  return absl::OkStatus();
}

size_t TrainCount(size_t n, double train_fraction) {
  return static_cast<size_t>(std::llround(train_fraction * static_cast<double>(n)));
}

}  // namespace

absl::Status SplitPlan::Validate() const {
  if (kind == Kind::kHoldout) {
    if (auto status = CheckFraction(train_fraction); !status.ok()) return status;
  } else if (k < 2) {
    return absl::InvalidArgumentError(absl::StrCat("k must be >= 2, got ", k));
  }
  if (rounds < 1 || repeats < 1) {
    return absl::InvalidArgumentError("rounds and repeats must be >= 1");
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<size_t>> SampleStratifiedIndices(
    std::span<const BinaryLabel> labels, size_t n_normal, size_t n_attack,
    uint64_t seed) {
  std::vector<size_t> by_class[2];
  for (size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);
  const size_t requested[2] = {n_normal, n_attack};
  for (int c = 0; c < 2; ++c) {
    if (by_class[c].size() < requested[c]) {
      return absl::FailedPreconditionError(absl::StrCat(
          "InsufficientInstances: class ", c == kAttack ? "attack" : "normal",
          " has ", by_class[c].size(), " rows, ", requested[c], " requested"));
    }
  }
  utils::Rng rng(seed);
  std::vector<size_t> sample;
  sample.reserve(n_normal + n_attack);
  for (int c = 0; c < 2; ++c) {
    for (const size_t pick :
         utils::SampleWithoutReplacement(by_class[c].size(), requested[c], rng)) {
      sample.push_back(by_class[c][pick]);
    }
  }
  std::sort(sample.begin(), sample.end());
  return sample;
}

absl::StatusOr<Dataset> SampleStratified(const Dataset& ds, size_t n_normal,
                                         size_t n_attack, uint64_t seed) {
  auto indices = SampleStratifiedIndices(ds.labels(), n_normal, n_attack, seed);
  if (!indices.ok()) return indices.status();
  return ds.Subset(*indices);
}

absl::StatusOr<IndexSplit> SplitHoldout(size_t n, double train_fraction,
                                        uint64_t seed) {
  if (auto status = CheckFraction(train_fraction); !status.ok()) return status;
  utils::Rng rng(seed);
  std::vector<size_t> order = utils::ShuffledIndices(n, rng);
  const size_t n_train = TrainCount(n, train_fraction);
  IndexSplit split;
  split.train.assign(order.begin(), order.begin() + n_train);
  split.test.assign(order.begin() + n_train, order.end());
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

absl::StatusOr<IndexSplit> SplitHoldoutStratified(
    std::span<const BinaryLabel> labels, double train_fraction, uint64_t seed) {
  if (auto status = CheckFraction(train_fraction); !status.ok()) return status;
  utils::Rng rng(seed);
  IndexSplit split;
  for (const BinaryLabel c : {kNormal, kAttack}) {
    std::vector<size_t> members;
    for (size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == c) members.push_back(i);
    }
    utils::Shuffle(std::span<size_t>(members), rng);
    const size_t n_train = TrainCount(members.size(), train_fraction);
    split.train.insert(split.train.end(), members.begin(),
                       members.begin() + n_train);
    split.test.insert(split.test.end(), members.begin() + n_train,
                      members.end());
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

absl::StatusOr<std::vector<IndexSplit>> KFoldPartitions(size_t n, int k,
                                                        uint64_t seed) {
  if (k < 2) {
    return absl::InvalidArgumentError(absl::StrCat("k must be >= 2, got ", k));
  }
  if (static_cast<size_t>(k) > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("KTooLarge: k=", k, " exceeds ", n, " rows"));
  }
  utils::Rng rng(seed);
  const std::vector<size_t> order = utils::ShuffledIndices(n, rng);
  std::vector<int> fold_of(n);
  const size_t base = n / k;
  const size_t extra = n % k;
  size_t pos = 0;
  for (int f = 0; f < k; ++f) {
    const size_t size = base + (static_cast<size_t>(f) < extra ? 1 : 0);
    for (size_t j = 0; j < size; ++j) fold_of[order[pos++]] = f;
  }
  std::vector<IndexSplit> folds(k);
  for (size_t i = 0; i < n; ++i) {
    for (int f = 0; f < k; ++f) {
      (f == fold_of[i] ? folds[f].test : folds[f].train).push_back(i);
    }
  }
  return folds;
}

}  // namespace idsbench::data
