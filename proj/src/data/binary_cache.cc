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

#include "idsbench/data/binary_cache.h"

#include <bit>
#include <cstring>
#include <unordered_map>

#include "absl/strings/str_cat.h"
#include "idsbench/utils/csv.h"

namespace idsbench::data {
namespace {

class Writer {
 public:
  void U8(uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void U32(uint32_t v) { Uint(v, 4); }
  void U64(uint64_t v) { Uint(v, 8); }
  void F64(double v) { U64(std::bit_cast<uint64_t>(v)); }
  void Bytes(absl::string_view s) {
    U64(s.size());
    out_.append(s.data(), s.size());
  }
  void Raw(absl::string_view s) { out_.append(s.data(), s.size()); }
  std::string Take() { return std::move(out_); }

 private:
  void Uint(uint64_t v, int bytes) {
    for (int i = 0; i < bytes; ++i) out_.push_back(static_cast<char>(v >> (8 * i)));
  }
  std::string out_;
};

class Reader {
 public:
  explicit Reader(absl::string_view in) : in_(in) {}

  bool U8(uint8_t* v) {
    uint64_t x;
    if (!Uint(1, &x)) return false;
    *v = static_cast<uint8_t>(x);
    return true;
  }
  bool U32(uint32_t* v) {
    uint64_t x;
    if (!Uint(4, &x)) return false;
    *v = static_cast<uint32_t>(x);
    return true;
  }
  bool U64(uint64_t* v) { return Uint(8, v); }
  bool F64(double* v) {
    uint64_t x;
    if (!Uint(8, &x)) return false;
    *v = std::bit_cast<double>(x);
    return true;
  }
  bool Bytes(std::string* s) {
    uint64_t n;
    if (!U64(&n) || n > in_.size() - pos_) return false;
    s->assign(in_.data() + pos_, n);
    pos_ += n;
    return true;
  }
  bool Raw(size_t n, absl::string_view* s) {
    if (n > in_.size() - pos_) return false;
    *s = in_.substr(pos_, n);
    pos_ += n;
    return true;
  }
  size_t remaining() const { return in_.size() - pos_; }

 private:
  bool Uint(int bytes, uint64_t* v) {
    if (static_cast<size_t>(bytes) > in_.size() - pos_) return false;
    uint64_t x = 0;
    for (int i = 0; i < bytes; ++i) {
      x |= static_cast<uint64_t>(static_cast<unsigned char>(in_[pos_ + i]))
           << (8 * i);
    }
    pos_ += bytes;
    *v = x;
    return true;
  }
  absl::string_view in_;
  size_t pos_ = 0;
};

absl::Status Corrupt(absl::string_view what) {
  return absl::DataLossError(absl::StrCat("corrupt dataset cache: ", what));
}

}  // namespace

std::string SerializeDataset(const Dataset& ds) {
  Writer w;
  w.Raw(kBinaryCacheMagic);
  w.Bytes(SchemaToText(ds.schema()));
  w.U64(ds.num_rows());
  w.U64(ds.num_features());
  for (const FeatureColumn& column : ds.columns()) {
    if (!column.is_categorical()) {
      w.U8(0);
      for (const double v : column.numeric) w.F64(v);
      continue;
    }
    w.U8(1);
    std::vector<absl::string_view> dictionary;
    std::unordered_map<std::string, uint32_t> index;
    std::vector<uint32_t> codes;
    codes.reserve(column.categorical.size());
    for (const std::string& value : column.categorical) {
      const auto [it, inserted] =
          index.emplace(value, static_cast<uint32_t>(dictionary.size()));
      if (inserted) dictionary.push_back(value);
      codes.push_back(it->second);
    }
    w.U64(dictionary.size());
    for (const auto value : dictionary) w.Bytes(value);
    for (const uint32_t code : codes) w.U32(code);
  }
  for (const BinaryLabel label : ds.labels()) w.U8(label);
  return w.Take();
}

absl::StatusOr<Dataset> DeserializeDataset(absl::string_view bytes) {
  Reader r(bytes);
  absl::string_view magic;
  if (!r.Raw(kBinaryCacheMagic.size(), &magic) || magic != kBinaryCacheMagic) {
    return absl::InvalidArgumentError("not a dataset cache (bad magic)");
  }
  std::string schema_text;
  if (!r.Bytes(&schema_text)) return Corrupt("schema");
  auto schema = ParseSchema(schema_text);
  if (!schema.ok()) return schema.status();
  uint64_t rows, cols;
  if (!r.U64(&rows) || !r.U64(&cols)) return Corrupt("dimensions");
  if (cols != schema->feature_count()) return Corrupt("column count");
  // Each row needs at least one byte (its label).
  if (rows > r.remaining()) return Corrupt("row count");

  const std::vector<size_t> feature_indices = schema->FeatureColumns();
  std::vector<FeatureColumn> columns(cols);
  for (uint64_t c = 0; c < cols; ++c) {
    FeatureColumn& column = columns[c];
    column.name = schema->columns[feature_indices[c]].name;
    uint8_t kind;
    if (!r.U8(&kind) || kind > 1) return Corrupt("column kind");
    column.kind = kind == 0 ? ColumnRole::kNumeric : ColumnRole::kCategorical;
    if (kind == 0) {
      column.numeric.resize(rows);
      for (uint64_t i = 0; i < rows; ++i) {
        if (!r.F64(&column.numeric[i])) return Corrupt("numeric column");
      }
      continue;
    }
    uint64_t dictionary_size;
    if (!r.U64(&dictionary_size) || dictionary_size > r.remaining()) {
      return Corrupt("dictionary size");
    }
    std::vector<std::string> dictionary(dictionary_size);
    for (auto& value : dictionary) {
      if (!r.Bytes(&value)) return Corrupt("dictionary");
    }
    column.categorical.reserve(rows);
    for (uint64_t i = 0; i < rows; ++i) {
      uint32_t code;
      if (!r.U32(&code) || code >= dictionary_size) {
        return Corrupt("categorical column");
      }
      column.categorical.push_back(dictionary[code]);
    }
  }
  std::vector<BinaryLabel> labels(rows);
  for (auto& label : labels) {
    if (!r.U8(&label)) return Corrupt("labels");
  }
  if (r.remaining() != 0) return Corrupt("trailing bytes");
  return Dataset::Create(*std::move(schema), std::move(columns),
                         std::move(labels));
}

absl::Status WriteBinaryCache(const Dataset& ds,
                              const std::filesystem::path& path) {
  return utils::WriteFile(path, SerializeDataset(ds));
}

absl::StatusOr<Dataset> ReadBinaryCache(const std::filesystem::path& path) {
  auto bytes = utils::ReadFile(path);
  if (!bytes.ok()) return bytes.status();
  return DeserializeDataset(*bytes);
}

}  // namespace idsbench::data
