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

#include "idsbench/data/schema.h"

#include <set>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "idsbench/utils/csv.h"

namespace idsbench::data {
namespace internal {
extern const std::pair<absl::string_view, absl::string_view> kBuiltinSchemas[];
extern const int kNumBuiltinSchemas;
}  // namespace internal

namespace {

constexpr int kSchemaFormatVersion = 1;

absl::Status LineError(int line_no, absl::string_view reason) {
  return absl::InvalidArgumentError(
      absl::StrCat("schema line ", line_no, ": ", reason));
}

absl::string_view RoleName(ColumnRole role) {
  switch (role) {
    case ColumnRole::kNumeric:
      return "numeric";
    case ColumnRole::kCategorical:
      return "categorical";
    case ColumnRole::kLabel:
      return "label";
    case ColumnRole::kIgnore:
      return "ignore";
  }
  return "ignore";
}

std::optional<ColumnRole> ParseRole(absl::string_view text) {
  if (text == "numeric") return ColumnRole::kNumeric;
  if (text == "categorical") return ColumnRole::kCategorical;
  if (text == "label") return ColumnRole::kLabel;
  if (text == "ignore") return ColumnRole::kIgnore;
  return std::nullopt;
}

SchemaId IdFromName(absl::string_view name) {
  if (absl::EqualsIgnoreCase(name, "CIDDS001")) return SchemaId::kCidds001;
  if (absl::EqualsIgnoreCase(name, "UNSWNB15")) return SchemaId::kUnswNb15;
  if (absl::EqualsIgnoreCase(name, "NSLKDD")) return SchemaId::kNslKdd;
  return SchemaId::kGeneric;
}

absl::Status Validate(const DatasetSchema& schema) {
  if (schema.name.empty()) {
    return absl::InvalidArgumentError("schema has no name");
  }
  if (schema.FeatureColumns().empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("schema ", schema.name, " declares no feature column"));
  }
  if (schema.LabelColumns().empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("schema ", schema.name, " declares no label column"));
  }
  std::set<std::string> names;
  for (const auto& column : schema.columns) {
    if (!names.insert(column.name).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate column '", column.name, "'"));
    }
  }
  for (const auto& rule : schema.label_rules) {
    const auto index = schema.ColumnIndex(rule.column);
    if (!index || schema.columns[*index].role != ColumnRole::kLabel) {
      return absl::InvalidArgumentError(absl::StrCat(
          "label rule refers to '", rule.column, "' which is not a label column"));
    }
  }
  return absl::OkStatus();
}

}  // namespace

std::vector<size_t> DatasetSchema::FeatureColumns() const {
  std::vector<size_t> indices;
  for (size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].role == ColumnRole::kNumeric ||
        columns[i].role == ColumnRole::kCategorical) {
      indices.push_back(i);
    }
  }
  return indices;
}

std::vector<size_t> DatasetSchema::LabelColumns() const {
  std::vector<size_t> indices;
  for (size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].role == ColumnRole::kLabel) indices.push_back(i);
  }
  return indices;
}

std::optional<size_t> DatasetSchema::ColumnIndex(absl::string_view name) const {
  for (size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].name == name) return i;
  }
  return std::nullopt;
}

absl::StatusOr<DatasetSchema> ParseSchema(absl::string_view text) {
  DatasetSchema schema;
  bool saw_magic = false;
  int line_no = 0;
  for (absl::string_view raw_line : absl::StrSplit(text, '\n')) {
    ++line_no;
    absl::string_view line = absl::StripAsciiWhitespace(raw_line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<absl::string_view> tokens =
        absl::StrSplit(line, ' ', absl::SkipEmpty());
    const absl::string_view keyword = tokens.front();

    if (!saw_magic) {
      if (keyword != "idsbench-schema" || tokens.size() != 2) {
        return LineError(line_no, "expected 'idsbench-schema <version>'");
      }
      if (tokens[1] != "1") {
        return LineError(line_no, absl::StrCat("unsupported schema version ",
                                               tokens[1]));
      }
      schema.version = kSchemaFormatVersion;
      saw_magic = true;
      continue;
    }

    if (keyword == "name" && tokens.size() == 2) {
      schema.name = std::string(tokens[1]);
      schema.id = IdFromName(schema.name);
    } else if (keyword == "header" && tokens.size() == 2) {
      if (tokens[1] == "required") {
        schema.header = HeaderMode::kRequired;
      } else if (tokens[1] == "auto") {
        schema.header = HeaderMode::kAuto;
      } else {
        return LineError(line_no, "header must be 'required' or 'auto'");
      }
    } else if (keyword == "column" && tokens.size() >= 3) {
      const auto role = ParseRole(tokens.back());
      if (!role) {
        return LineError(line_no,
                         absl::StrCat("unknown column role '", tokens.back(), "'"));
      }
      std::vector<absl::string_view> name_parts(tokens.begin() + 1,
                                               tokens.end() - 1);
      schema.columns.push_back({absl::StrJoin(name_parts, " "), *role});
    } else if (keyword == "rule" && tokens.size() >= 4) {
      LabelRule rule;
      if (tokens.back() == "0") {
        rule.label = kNormal;
      } else if (tokens.back() == "1") {
        rule.label = kAttack;
      } else {
        return LineError(line_no, "rule label must be 0 or 1");
      }
      rule.value = std::string(tokens[tokens.size() - 2]);
      std::vector<absl::string_view> column_parts(tokens.begin() + 1,
                                                 tokens.end() - 2);
      rule.column = absl::StrJoin(column_parts, " ");
      schema.label_rules.push_back(std::move(rule));
    } else if (keyword == "unmatched" && tokens.size() == 2) {
      if (tokens[1] == "0") {
        schema.unmatched = UnmatchedLabel::kNormal;
      } else if (tokens[1] == "1") {
        schema.unmatched = UnmatchedLabel::kAttack;
      } else if (tokens[1] == "exclude") {
        schema.unmatched = UnmatchedLabel::kExclude;
      } else if (tokens[1] == "error") {
        schema.unmatched = UnmatchedLabel::kError;
      } else {
        return LineError(line_no,
                         "unmatched must be 0, 1, 'exclude' or 'error'");
      }
    } else {
      return LineError(line_no, absl::StrCat("cannot parse '", line, "'"));
    }
  }
  if (!saw_magic) {
    return absl::InvalidArgumentError("missing 'idsbench-schema' line");
  }
  if (auto status = Validate(schema); !status.ok()) return status;
  return schema;
}

absl::StatusOr<DatasetSchema> LoadSchemaFile(
    const std::filesystem::path& path) {
  auto text = utils::ReadFile(path);
  if (!text.ok()) return text.status();
  auto schema = ParseSchema(*text);
  if (!schema.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path.string(), ": ", schema.status().message()));
  }
  return schema;
}

std::string SchemaToText(const DatasetSchema& schema) {
  std::string out = absl::StrCat("idsbench-schema ", kSchemaFormatVersion,
                                 "\nname ", schema.name, "\nheader ",
                                 schema.header == HeaderMode::kAuto
                                     ? "auto"
                                     : "required",
                                 "\n");
  for (const auto& column : schema.columns) {
    absl::StrAppend(&out, "column ", column.name, " ", RoleName(column.role),
                    "\n");
  }
  for (const auto& rule : schema.label_rules) {
    absl::StrAppend(&out, "rule ", rule.column, " ", rule.value, " ",
                    static_cast<int>(rule.label), "\n");
  }
  absl::string_view unmatched = "error";
  switch (schema.unmatched) {
    case UnmatchedLabel::kNormal:
      unmatched = "0";
      break;
    case UnmatchedLabel::kAttack:
      unmatched = "1";
      break;
    case UnmatchedLabel::kExclude:
      unmatched = "exclude";
      break;
    case UnmatchedLabel::kError:
      break;
  }
  absl::StrAppend(&out, "unmatched ", unmatched, "\n");
  return out;
}

absl::StatusOr<DatasetSchema> BuiltinSchema(absl::string_view name) {
  for (int i = 0; i < internal::kNumBuiltinSchemas; ++i) {
    const auto& [stem, text] = internal::kBuiltinSchemas[i];
    auto schema = ParseSchema(text);
    if (!schema.ok()) return schema.status();
    if (absl::EqualsIgnoreCase(stem, name) ||
        absl::EqualsIgnoreCase(schema->name, name)) {
      return schema;
    }
  }
  return absl::NotFoundError(absl::StrCat("no built-in schema '", name, "'"));
}

absl::string_view SchemaIdName(SchemaId id) {
  switch (id) {
    case SchemaId::kCidds001:
      return "CIDDS001";
    case SchemaId::kUnswNb15:
      return "UNSWNB15";
    case SchemaId::kNslKdd:
      return "NSLKDD";
    case SchemaId::kGeneric:
      return "GENERIC";
  }
  return "GENERIC";
}

}  // namespace idsbench::data
