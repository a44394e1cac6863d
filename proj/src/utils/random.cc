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

#include "idsbench/utils/random.h"

#include <numeric>

namespace idsbench::utils {

uint64_t Mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t DeriveSeed(uint64_t parent, absl::string_view name,
                    std::initializer_list<uint64_t> indices) {
  // FNV-1a over the name, then fold in the parent and every index.
  uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  uint64_t state = Mix64(parent ^ Mix64(h));
  for (const uint64_t index : indices) {
    state = Mix64(state ^ Mix64(index + 0x632be59bd9b4e019ULL));
  }
  return state;
}

uint64_t UniformIndex(Rng& rng, uint64_t n) {
  // Rejection sampling on the top of the range keeps the draw unbiased.
  const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
  uint64_t value;
  do {
    value = rng();
  } while (value >= limit);
  return value % n;
}

double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<size_t> ShuffledIndices(size_t n, Rng& rng) {
  std::vector<size_t> indices(n);
  std::iota(indices.begin(), indices.end(), size_t{0});
  Shuffle(std::span<size_t>(indices), rng);
  return indices;
}

std::vector<size_t> SampleWithoutReplacement(size_t n, size_t count,
                                             Rng& rng) {
  std::vector<size_t> pool(n);
  std::iota(pool.begin(), pool.end(), size_t{0});
  if (count > n) count = n;
  for (size_t i = 0; i < count; ++i) {
    const size_t j = i + UniformIndex(rng, n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace idsbench::utils
