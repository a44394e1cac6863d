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

// Loading of delimited flow files into a Dataset.
//
// Numeric fields accept plain decimals, magnitude suffixes ("1.2 M" as
// written by nfdump), and "YYYY-MM-DD HH:MM:SS[.fff]" timestamps (converted
// to seconds since the Unix epoch, UTC). Empty fields, "?", "NA" and "NaN"
// are missing values and load as NaN.
//
// Rows that cannot be parsed are skipped and listed in the LoadReport. More
// than 1% skipped rows is an error.

#ifndef IDSBENCH_DATA_LOADER_H_
#define IDSBENCH_DATA_LOADER_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "idsbench/data/dataset.h"
#include "idsbench/data/schema.h"

namespace idsbench::data {

struct SkippedRow {
  int64_t line = 0;
  std::string reason;
};

struct LoadReport {
  int64_t records_read = 0;
  int64_t rows_loaded = 0;
  // Rows dropped by an "unmatched exclude" label rule.
  int64_t rows_excluded = 0;
  std::vector<SkippedRow> skipped;
  std::vector<std::string> warnings;
  bool header_present = false;
};

absl::StatusOr<Dataset> LoadDataset(const std::filesystem::path& path,
                                    const DatasetSchema& schema,
                                    LoadReport* report = nullptr);

absl::StatusOr<Dataset> LoadDatasetFromText(std::string text,
                                            const DatasetSchema& schema,
                                            LoadReport* report = nullptr);

// Parses one numeric field. Returns NaN for missing values and nullopt if
// the field is not numeric.
std::optional<double> ParseNumericField(absl::string_view field);

// Binary label of a row given the raw values of its label columns (in
// schema order). nullopt means the row is excluded; an error means no rule
// applies and the schema says unmatched rows are errors.
absl::StatusOr<std::optional<BinaryLabel>> BinarizeLabel(
    const DatasetSchema& schema, const std::vector<absl::string_view>& values);

}  // namespace idsbench::data

#endif  // IDSBENCH_DATA_LOADER_H_
