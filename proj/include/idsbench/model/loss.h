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

// Binary cross-entropy and the logistic link shared by the boosting and
// neural network learners.

#ifndef IDSBENCH_MODEL_LOSS_H_
#define IDSBENCH_MODEL_LOSS_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>

namespace idsbench::model {

// Probabilities are clipped to [kProbabilityClip, 1 - kProbabilityClip]
// before taking logarithms.
inline constexpr double kProbabilityClip = 1e-15;

inline double Sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// -(y ln p + (1 - y) ln(1 - p)) for one instance.
inline double LogLoss(double p, uint8_t y) {
  p = std::clamp(p, kProbabilityClip, 1.0 - kProbabilityClip);
  return y ? -std::log(p) : -std::log1p(-p);
}

// Mean LogLoss over instances.
inline double MeanLogLoss(std::span<const double> p,
                          std::span<const uint8_t> y) {
  if (p.empty()) return 0.0;
  double sum = 0.0;
  for (size_t i = 0; i < p.size(); ++i) sum += LogLoss(p[i], y[i]);
  return sum / static_cast<double>(p.size());
}

}  // namespace idsbench::model

#endif  // IDSBENCH_MODEL_LOSS_H_
