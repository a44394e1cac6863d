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

#include "idsbench/data/loader.h"

#include <charconv>
#include <cmath>
#include <limits>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "idsbench/utils/csv.h"

namespace idsbench::data {
namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

bool IsMissingToken(absl::string_view field) {
  return field.empty() || field == "?" || absl::EqualsIgnoreCase(field, "NA") ||
         absl::EqualsIgnoreCase(field, "NaN");
}

std::optional<double> ParsePlainNumber(absl::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto result =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

bool ParseDigits(absl::string_view text, int* out) {
  if (text.empty()) return false;
  int value = 0;
  for (const char c : text) {
    if (!absl::ascii_isdigit(static_cast<unsigned char>(c))) return false;
    value = value * 10 + (c - '0');
  }
  *out = value;
  return true;
}

// Days since 1970-01-01 of a proleptic Gregorian date.
int64_t DaysFromCivil(int64_t y, int m, int d) {
  y -= m <= 2;
  const int64_t era = (y >= 0 ? y : y - 399) / 400;
  const int64_t yoe = y - era * 400;
  const int64_t doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + doe - 719468;
}

// "YYYY-MM-DD HH:MM:SS[.fff]" (a 'T' separator is accepted as well).
std::optional<double> ParseTimestamp(absl::string_view text) {
  if (text.size() < 19 || text[4] != '-' || text[7] != '-' ||
      (text[10] != ' ' && text[10] != 'T') || text[13] != ':' ||
      text[16] != ':') {
    return std::nullopt;
  }
  int year, month, day, hour, minute, second;
  if (!ParseDigits(text.substr(0, 4), &year) ||
      !ParseDigits(text.substr(5, 2), &month) ||
      !ParseDigits(text.substr(8, 2), &day) ||
      !ParseDigits(text.substr(11, 2), &hour) ||
      !ParseDigits(text.substr(14, 2), &minute) ||
      !ParseDigits(text.substr(17, 2), &second)) {
    return std::nullopt;
  }
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 ||
      minute > 59 || second > 60) {
    return std::nullopt;
  }
  double fraction = 0.0;
  if (text.size() > 19) {
    if (text[19] != '.') return std::nullopt;
    const auto parsed = ParsePlainNumber(absl::StrCat("0", text.substr(19)));
    if (!parsed) return std::nullopt;
    fraction = *parsed;
  }
  const int64_t days = DaysFromCivil(year, month, day);
  return static_cast<double>(days * 86400 + hour * 3600 + minute * 60 +
                             second) +
         fraction;
}

absl::string_view Trim(absl::string_view s) { return absl::StripAsciiWhitespace(s); }

}  // namespace

std::optional<double> ParseNumericField(absl::string_view field) {
  field = Trim(field);
  if (IsMissingToken(field)) return kMissing;
  if (auto value = ParsePlainNumber(field)) return value;

  const char last = field.back();
  double multiplier = 0.0;
  if (last == 'K' || last == 'k') multiplier = 1e3;
  if (last == 'M' || last == 'm') multiplier = 1e6;
  if (last == 'G' || last == 'g') multiplier = 1e9;
  if (multiplier > 0.0) {
    if (auto value = ParsePlainNumber(Trim(field.substr(0, field.size() - 1)))) {
      return *value * multiplier;
    }
  }
  return ParseTimestamp(field);
}

absl::StatusOr<std::optional<BinaryLabel>> BinarizeLabel(
    const DatasetSchema& schema, const std::vector<absl::string_view>& values) {
  const std::vector<size_t> label_columns = schema.LabelColumns();
  for (const LabelRule& rule : schema.label_rules) {
    for (size_t i = 0; i < label_columns.size() && i < values.size(); ++i) {
      if (schema.columns[label_columns[i]].name == rule.column &&
          absl::EqualsIgnoreCase(Trim(values[i]), rule.value)) {
        return std::optional<BinaryLabel>(rule.label);
      }
    }
  }
  switch (schema.unmatched) {
    case UnmatchedLabel::kNormal:
      return std::optional<BinaryLabel>(kNormal);
    case UnmatchedLabel::kAttack:
      return std::optional<BinaryLabel>(kAttack);
    case UnmatchedLabel::kExclude:
      return std::optional<BinaryLabel>();
    case UnmatchedLabel::kError:
      break;
  }
  std::string shown;
  for (const auto value : values) {
    absl::StrAppend(&shown, shown.empty() ? "" : ", ", "'", Trim(value), "'");
  }
  return absl::InvalidArgumentError(
      absl::StrCat("no label rule matches ", shown));
}

absl::StatusOr<Dataset> LoadDatasetFromText(std::string text,
                                            const DatasetSchema& schema,
                                            LoadReport* report) {
  LoadReport local_report;
  if (report == nullptr) report = &local_report;
  *report = LoadReport();

  const std::vector<size_t> feature_columns = schema.FeatureColumns();
  const std::vector<size_t> label_columns = schema.LabelColumns();
  std::vector<FeatureColumn> columns;
  for (const size_t c : feature_columns) {
    FeatureColumn& column = columns.emplace_back();
    column.name = schema.columns[c].name;
    column.kind = schema.columns[c].role;
  }
  std::vector<BinaryLabel> labels;

  utils::CsvReader reader(std::move(text));
  utils::CsvRecord record;
  if (!reader.Next(&record)) {
    report->warnings.push_back("file is empty; dataset has no rows");
    return Dataset::Create(schema, std::move(columns), std::move(labels));
  }

  // field_of[c] = position in the file record of schema column c.
  std::vector<size_t> field_of(schema.columns.size());
  size_t min_fields = schema.columns.size();
  size_t max_fields = schema.columns.size();
  bool have_pending_record = false;

  // A first record naming any schema column is a header.
  bool looks_like_header = false;
  for (const auto& field : record.fields) {
    for (const auto& column : schema.columns) {
      if (absl::EqualsIgnoreCase(Trim(field), column.name)) {
        looks_like_header = true;
      }
    }
  }

  if (looks_like_header) {
    report->header_present = true;
    std::vector<bool> seen(schema.columns.size(), false);
    for (size_t f = 0; f < record.fields.size(); ++f) {
      const absl::string_view name = Trim(record.fields[f]);
      std::optional<size_t> match;
      for (size_t c = 0; c < schema.columns.size(); ++c) {
        if (absl::EqualsIgnoreCase(name, schema.columns[c].name)) match = c;
      }
      if (!match || seen[*match]) {
        return absl::InvalidArgumentError(
            absl::StrCat("SchemaMismatch: column '", name, "' in header is ",
                         match ? "duplicated" : "not declared by schema ",
                         match ? "" : schema.name));
      }
      seen[*match] = true;
      field_of[*match] = f;
    }
    for (size_t c = 0; c < schema.columns.size(); ++c) {
      if (!seen[c]) {
        return absl::InvalidArgumentError(
            absl::StrCat("SchemaMismatch: column '", schema.columns[c].name,
                         "' missing from header"));
      }
    }
  } else {
    if (schema.header == HeaderMode::kRequired) {
      return absl::InvalidArgumentError(absl::StrCat(
          "SchemaMismatch: column '", schema.columns.front().name,
          "' missing from header (schema ", schema.name,
          " requires a header row)"));
    }
    for (size_t c = 0; c < schema.columns.size(); ++c) field_of[c] = c;
    // Trailing ignored columns may be absent in positional files.
    while (min_fields > 0 &&
           schema.columns[min_fields - 1].role == ColumnRole::kIgnore) {
      --min_fields;
    }
    have_pending_record = true;
  }

  std::vector<double> numeric_row(feature_columns.size());
  std::vector<absl::string_view> label_values(label_columns.size());
  while (have_pending_record || reader.Next(&record)) {
    have_pending_record = false;
    ++report->records_read;
    auto skip = [&](std::string reason) {
      report->skipped.push_back({record.line, std::move(reason)});
    };
    if (record.malformed) {
      skip("malformed quoting");
      continue;
    }
    if (record.fields.size() < min_fields ||
        record.fields.size() > max_fields) {
      skip(absl::StrCat("expected ", schema.columns.size(), " fields, found ",
                        record.fields.size()));
      continue;
    }
    for (size_t l = 0; l < label_columns.size(); ++l) {
      label_values[l] = record.fields[field_of[label_columns[l]]];
    }
    auto label = BinarizeLabel(schema, label_values);
    if (!label.ok()) {
      skip(std::string(label.status().message()));
      continue;
    }
    if (!label->has_value()) {
      ++report->rows_excluded;
      continue;
    }
    bool parsed = true;
    for (size_t i = 0; i < feature_columns.size() && parsed; ++i) {
      if (columns[i].is_categorical()) continue;
      const std::string& field = record.fields[field_of[feature_columns[i]]];
      const auto value = ParseNumericField(field);
      if (!value) {
        skip(absl::StrCat("column '", columns[i].name, "': cannot parse '",
                          field, "' as a number"));
        parsed = false;
      } else {
        numeric_row[i] = *value;
      }
    }
    if (!parsed) continue;
    for (size_t i = 0; i < feature_columns.size(); ++i) {
      if (columns[i].is_categorical()) {
        columns[i].categorical.emplace_back(
            Trim(record.fields[field_of[feature_columns[i]]]));
      } else {
        columns[i].numeric.push_back(numeric_row[i]);
      }
    }
    labels.push_back(**label);
  }

  report->rows_loaded = static_cast<int64_t>(labels.size());
  const int64_t skipped = static_cast<int64_t>(report->skipped.size());
  if (skipped * 100 > report->records_read) {
    const SkippedRow& first = report->skipped.front();
    return absl::InvalidArgumentError(absl::StrCat(
        "UnparseableRow: ", skipped, " of ", report->records_read,
        " rows could not be parsed (more than 1%); first at line ", first.line,
        ": ", first.reason));
  }
  if (report->records_read == 0) {
    report->warnings.push_back("file has a header but no data rows");
  }
  for (const SkippedRow& row : report->skipped) {
    report->warnings.push_back(
        absl::StrCat("UnparseableRow: line ", row.line, ": ", row.reason));
  }
  return Dataset::Create(schema, std::move(columns), std::move(labels));
}

absl::StatusOr<Dataset> LoadDataset(const std::filesystem::path& path,
                                    const DatasetSchema& schema,
                                    LoadReport* report) {
  auto text = utils::ReadFile(path);
  if (!text.ok()) return text.status();
  auto ds = LoadDatasetFromText(*std::move(text), schema, report);
  if (!ds.ok()) {
    return absl::Status(ds.status().code(),
                        absl::StrCat(path.string(), ": ", ds.status().message()));
  }
  return ds;
}

}  // namespace idsbench::data
