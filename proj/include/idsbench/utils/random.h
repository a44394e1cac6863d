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

// Seeded randomness with output that is bit-identical across standard
// libraries. std::mt19937_64 is fully specified by the standard, but the
// std::*_distribution adaptors and std::shuffle are not, so index draws,
// unit reals and shuffles are implemented here on top of the raw engine.

#ifndef IDSBENCH_UTILS_RANDOM_H_
#define IDSBENCH_UTILS_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include "absl/strings/string_view.h"
#include <utility>
#include <vector>

namespace idsbench::utils {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
uint64_t Mix64(uint64_t x);

// Derives a child seed from a parent seed, a component name and optional
// indices, e.g. DeriveSeed(master, "holdout", {repeat, round}). Distinct
// (name, indices) tuples give statistically independent streams.
uint64_t DeriveSeed(uint64_t parent, absl::string_view name,
                    std::initializer_list<uint64_t> indices = {});

// Uniform integer in [0, n). n must be > 0.
uint64_t UniformIndex(Rng& rng, uint64_t n);

// Uniform real in [0, 1) with 53 random bits.
double UniformUnit(Rng& rng);

// Fisher-Yates shuffle.
template <typename T>
void Shuffle(std::span<T> values, Rng& rng) {
  for (size_t i = values.size(); i > 1; --i) {
    const size_t j = UniformIndex(rng, i);
    std::swap(values[i - 1], values[j]);
  }
}

// Returns the identity permutation of [0, n) shuffled with `rng`.
std::vector<size_t> ShuffledIndices(size_t n, Rng& rng);

// Draws `count` distinct values from [0, n) (partial Fisher-Yates). The
// result is in draw order.
std::vector<size_t> SampleWithoutReplacement(size_t n, size_t count, Rng& rng);

}  // namespace idsbench::utils

#endif  // IDSBENCH_UTILS_RANDOM_H_
