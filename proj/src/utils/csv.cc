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

#include "idsbench/utils/csv.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace idsbench::utils {

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(
        absl::StrCat("FileNotFound: cannot open ", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteFile(const std::filesystem::path& path,
                       absl::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::UnavailableError(
        absl::StrCat("cannot write ", path.string()));
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    return absl::DataLossError(absl::StrCat("short write to ", path.string()));
  }
  return absl::OkStatus();
}

namespace {

char DetectDelimiter(absl::string_view text) {
  int commas = 0;
  int tabs = 0;
  bool quoted = false;
  for (const char c : text) {
    if (c == '"') {
      quoted = !quoted;
    } else if (!quoted) {
      if (c == '\n') {
        if (commas + tabs > 0) break;
      } else if (c == ',') {
        ++commas;
      } else if (c == '\t') {
        ++tabs;
      }
    }
  }
  return tabs > commas ? '\t' : ',';
}

}  // namespace

CsvReader::CsvReader(std::string text)
    : text_(std::move(text)), delimiter_(DetectDelimiter(text_)) {
  // Skip a UTF-8 byte order mark.
  if (text_.size() >= 3 && text_.compare(0, 3, "\xEF\xBB\xBF") == 0) pos_ = 3;
}

absl::StatusOr<CsvReader> CsvReader::Open(const std::filesystem::path& path) {
  auto text = ReadFile(path);
  if (!text.ok()) return text.status();
  return CsvReader(*std::move(text));
}

bool CsvReader::Next(CsvRecord* record) {
  record->fields.clear();
  record->malformed = false;

  // Skip blank lines.
  while (pos_ < text_.size() && (text_[pos_] == '\n' || text_[pos_] == '\r')) {
    if (text_[pos_] == '\n') ++line_;
    ++pos_;
  }
  if (pos_ >= text_.size()) return false;
  record->line = line_;

  std::string field;
  bool field_quoted = false;
  bool in_quotes = false;
  auto finish_field = [&] {
    if (!field_quoted) {
      record->fields.emplace_back(absl::StripAsciiWhitespace(field));
    } else {
      record->fields.push_back(field);
    }
    field.clear();
    field_quoted = false;
  };

  while (pos_ < text_.size()) {
    const char c = text_[pos_++];
    if (in_quotes) {
      if (c == '"') {
        if (pos_ < text_.size() && text_[pos_] == '"') {
          field.push_back('"');
          ++pos_;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line_;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      if (absl::StripAsciiWhitespace(field).empty() && !field_quoted) {
        field.clear();
        field_quoted = true;
        in_quotes = true;
      } else {
        // Stray quote inside an unquoted field.
        record->malformed = true;
        field.push_back(c);
      }
    } else if (c == delimiter_) {
      finish_field();
    } else if (c == '\n') {
      ++line_;
      break;
    } else if (c == '\r') {
      // Dropped; handles CRLF line endings.
    } else {
      if (field_quoted) record->malformed = true;  // Text after closing quote.
      field.push_back(c);
    }
  }
  if (in_quotes) record->malformed = true;
  finish_field();
  return true;
}

std::string EscapeCsvField(absl::string_view field) {
  if (field.find_first_of(",\"\n\r") == absl::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string CsvLine(const std::vector<std::string>& fields) {
  std::string line = absl::StrJoin(fields, ",",
                                   [](std::string* out, const std::string& field) {
                                     out->append(EscapeCsvField(field));
                                   });
  line.push_back('\n');
  return line;
}

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

}  // namespace idsbench::utils
