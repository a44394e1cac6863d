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

// Columnar binary snapshot of a loaded Dataset, so that large text files
// are parsed once. Layout (all integers little-endian):
//
//   "IDSB0001"                       8-byte magic
//   u64 n, schema descriptor text
//   u64 rows, u64 feature columns
//   per column: u8 kind (0 numeric, 1 categorical)
//     numeric:      rows x f64
//     categorical:  u64 dictionary size, dictionary strings (u64 n, bytes),
//                   rows x u32 dictionary index
//   rows x u8 labels

#ifndef IDSBENCH_DATA_BINARY_CACHE_H_
#define IDSBENCH_DATA_BINARY_CACHE_H_

#include <filesystem>
#include <string>
#include "absl/strings/string_view.h"

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "idsbench/data/dataset.h"

namespace idsbench::data {

inline constexpr absl::string_view kBinaryCacheMagic = "IDSB0001";

std::string SerializeDataset(const Dataset& ds);
absl::StatusOr<Dataset> DeserializeDataset(absl::string_view bytes);

absl::Status WriteBinaryCache(const Dataset& ds,
                              const std::filesystem::path& path);
absl::StatusOr<Dataset> ReadBinaryCache(const std::filesystem::path& path);

}  // namespace idsbench::data

#endif  // IDSBENCH_DATA_BINARY_CACHE_H_
