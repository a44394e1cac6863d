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

#ifndef IDSBENCH_UTILS_STATUS_MACROS_H_
#define IDSBENCH_UTILS_STATUS_MACROS_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define IDSBENCH_CONCAT_IMPL(x, y) x##y
#define IDSBENCH_CONCAT(x, y) IDSBENCH_CONCAT_IMPL(x, y)

#ifndef RETURN_IF_ERROR
#define RETURN_IF_ERROR(expr)                    \
  do {                                           \
    const absl::Status _status_tmp = (expr);     \
    if (!_status_tmp.ok()) return _status_tmp;   \
  } while (0)
#endif

#define IDSBENCH_ASSIGN_OR_RETURN_IMPL(statusor, lhs, rexpr) \
  auto statusor = (rexpr);                                   \
  if (!statusor.ok()) return statusor.status();              \
  lhs = std::move(statusor).value()

#ifndef ASSIGN_OR_RETURN
#define ASSIGN_OR_RETURN(lhs, rexpr) \
  IDSBENCH_ASSIGN_OR_RETURN_IMPL(    \
      IDSBENCH_CONCAT(_statusor_, __LINE__), lhs, rexpr)
#endif

#endif  // IDSBENCH_UTILS_STATUS_MACROS_H_
