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

#ifndef IDSBENCH_UTILS_CSV_H_
#define IDSBENCH_UTILS_CSV_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace idsbench::utils {

// Reads a whole file into memory.
absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path);

// Writes `content` to `path`, creating parent directories.
absl::Status WriteFile(const std::filesystem::path& path,
                       absl::string_view content);

// One parsed record of a delimited file.
struct CsvRecord {
  std::vector<std::string> fields;
  // 1-based line on which the record starts.
  int64_t line = 0;
  // Set when the record is malformed (e.g. an unterminated quote). The
  // fields are then unreliable and the caller should skip the record.
  bool malformed = false;
};

// Record reader for comma or tab separated text with RFC-4180 quoting:
// quoted fields may contain the delimiter, doubled quotes and line breaks.
// Unquoted fields are trimmed of surrounding blanks. Empty lines are skipped.
class CsvReader {
 public:
  // Takes ownership of the text. The delimiter is detected from the first
  // non-empty line: tab if it contains more tabs than commas outside quotes,
  // comma otherwise.
  explicit CsvReader(std::string text);

  static absl::StatusOr<CsvReader> Open(const std::filesystem::path& path);

  // Returns false at end of input.
  bool Next(CsvRecord* record);

  char delimiter() const { return delimiter_; }

 private:
  std::string text_;
  size_t pos_ = 0;
  int64_t line_ = 1;
  char delimiter_ = ',';
};

// Quotes a field if it contains a comma, quote or line break.
std::string EscapeCsvField(absl::string_view field);

// Joins already formatted fields with commas, escaping as needed, and
// terminates the line with '\n'.
std::string CsvLine(const std::vector<std::string>& fields);

// Shortest decimal representation that round-trips to the same double.
// NaN is rendered as "nan".
std::string FormatDouble(double value);

}  // namespace idsbench::utils

#endif  // IDSBENCH_UTILS_CSV_H_
