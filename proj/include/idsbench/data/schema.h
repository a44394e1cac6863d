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

// Column layout and label binarization rules of a flow dataset.
//
// Schemas are described by small versioned text files (see schemas/ in the
// source tree), e.g.
//
//   idsbench-schema 1
//   name NSLKDD
//   header auto
//   column duration numeric
//   column protocol_type categorical
//   ...
//   column class label
//   column difficulty ignore
//   rule class normal 0
//   unmatched 1
//
// "column <name> <role>" lists the file columns in order; names may contain
// spaces. "rule <column> <value> <label>" maps a label-column value
// (case-insensitive) to normal (0) or attack (1); rules are tried in order
// and the first match wins. "unmatched" says what happens to rows no rule
// matches: 0, 1, "exclude" (drop the row) or "error" (unparseable row).
// "header" is "required" or "auto" (a header row is used when present,
// columns are positional otherwise).

#ifndef IDSBENCH_DATA_SCHEMA_H_
#define IDSBENCH_DATA_SCHEMA_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"

namespace idsbench::data {

// 1 = attack (positive class), 0 = normal.
using BinaryLabel = uint8_t;
inline constexpr BinaryLabel kNormal = 0;
inline constexpr BinaryLabel kAttack = 1;

enum class SchemaId { kCidds001, kUnswNb15, kNslKdd, kGeneric };

enum class ColumnRole { kNumeric, kCategorical, kLabel, kIgnore };

enum class HeaderMode { kRequired, kAuto };

enum class UnmatchedLabel { kNormal, kAttack, kExclude, kError };

struct ColumnSpec {
  std::string name;
  ColumnRole role = ColumnRole::kNumeric;
};

struct LabelRule {
  std::string column;
  std::string value;
  BinaryLabel label = kAttack;
};

struct DatasetSchema {
  SchemaId id = SchemaId::kGeneric;
  std::string name;
  int version = 1;
  HeaderMode header = HeaderMode::kRequired;
  // File columns in positional order.
  std::vector<ColumnSpec> columns;
  std::vector<LabelRule> label_rules;
  UnmatchedLabel unmatched = UnmatchedLabel::kError;

  // Indices into `columns` of the numeric and categorical columns, in order.
  std::vector<size_t> FeatureColumns() const;
  std::vector<size_t> LabelColumns() const;
  size_t feature_count() const { return FeatureColumns().size(); }
  size_t label_count() const { return LabelColumns().size(); }
  std::optional<size_t> ColumnIndex(absl::string_view name) const;
};

absl::StatusOr<DatasetSchema> ParseSchema(absl::string_view text);
absl::StatusOr<DatasetSchema> LoadSchemaFile(const std::filesystem::path& path);

// Renders a schema back to descriptor text; ParseSchema(SchemaToText(s))
// reproduces `s`.
std::string SchemaToText(const DatasetSchema& schema);

// Built-in schemas by name: "NSLKDD", "UNSWNB15", "CIDDS001"
// (case-insensitive; the descriptor file stems "nsl_kdd", "unsw_nb15",
// "cidds001" are accepted too).
absl::StatusOr<DatasetSchema> BuiltinSchema(absl::string_view name);

absl::string_view SchemaIdName(SchemaId id);

}  // namespace idsbench::data

#endif  // IDSBENCH_DATA_SCHEMA_H_
