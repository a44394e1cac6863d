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

#ifndef IDSBENCH_UTILS_PARALLEL_H_
#define IDSBENCH_UTILS_PARALLEL_H_

#include <chrono>
#include <cstddef>
#include <functional>

namespace idsbench::utils {

// Runs fn(i) for every i in [0, n) on up to `workers` threads. Work items
// are claimed dynamically, so callers must write results by index rather
// than by completion order. workers <= 1 runs inline on the caller thread.
void ParallelFor(size_t n, int workers, const std::function<void(size_t)>& fn);

// Monotonic wall-clock stopwatch.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ElapsedSeconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace idsbench::utils

#endif  // IDSBENCH_UTILS_PARALLEL_H_
