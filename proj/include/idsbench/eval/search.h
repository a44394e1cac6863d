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

// Randomized hyperparameter search scored by k-fold accuracy.
//
// Each draw samples every parameter of the space in declaration order from
// one seeded stream. All draws are scored on the same k-fold partition;
// the best mean accuracy wins and ties go to the earlier draw.

#ifndef IDSBENCH_EVAL_SEARCH_H_
#define IDSBENCH_EVAL_SEARCH_H_

#include <string>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "idsbench/data/dataset.h"
#include "idsbench/eval/classifier.h"

namespace idsbench::eval {

// Integer uniform on [lo, hi].
struct IntRange {
  int64_t lo = 0;
  int64_t hi = 0;
};

// Real uniform on [lo, hi), or log-uniform when `log_scale` is set.
struct RealRange {
  double lo = 0.0;
  double hi = 0.0;
  bool log_scale = false;
};

// One of the listed values, uniformly.
struct Choice {
  std::vector<std::string> values;
};

struct ParamDistribution {
  std::string name;
  std::variant<IntRange, RealRange, Choice> distribution;
};

using ParamSpace = std::vector<ParamDistribution>;

// Parses "name=int:lo:hi", "name=real:lo:hi", "name=logreal:lo:hi" or
// "name=choice:a|b|c".
absl::StatusOr<ParamDistribution> ParseParamDistribution(absl::string_view text);

// Parameter name to value text, in declaration order.
using ParamDraw = std::vector<std::pair<std::string, std::string>>;

// `budget` draws of the space. Errors: EmptySpace.
absl::StatusOr<std::vector<ParamDraw>> DrawParams(const ParamSpace& space,
                                                  int budget, uint64_t seed);

struct SearchResult {
  ClassifierSpec best;
  ParamDraw best_draw;
  double best_score = 0.0;
  std::vector<ParamDraw> draws;
  std::vector<double> scores;
};

// Mean accuracy of `spec` over the folds of one k-fold partition seeded by
// `seed`.
absl::StatusOr<double> KFoldAccuracy(const ClassifierSpec& spec,
                                     const data::Dataset& ds, int k,
                                     uint64_t seed);

// Starts every draw from `base` and applies the drawn values. Errors:
// EmptySpace, budget < 1, and invalid parameter names.
absl::StatusOr<SearchResult> RandomSearch(const ClassifierSpec& base,
                                          const ParamSpace& space, int budget,
                                          const data::Dataset& ds, int k,
                                          uint64_t seed);

}  // namespace idsbench::eval

#endif  // IDSBENCH_EVAL_SEARCH_H_
