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

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <set>

#include "gtest/gtest.h"
#include "idsbench/utils/csv.h"
#include "idsbench/utils/parallel.h"
#include "idsbench/utils/random.h"
#include "test_util.h"

namespace idsbench::utils {
namespace {

std::vector<std::vector<std::string>> ReadAll(const std::string& text) {
  CsvReader reader(text);
  CsvRecord record;
  std::vector<std::vector<std::string>> out;
  while (reader.Next(&record)) out.push_back(record.fields);
  return out;
}

TEST(CsvReaderTest, QuotedFieldsAndTrimming) {
  const auto rows = ReadAll("a, b ,\"c,d\"\n\n\"x\"\"y\",\"line\nbreak\",z\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"a", "b", "c,d"}));
  EXPECT_EQ(rows[1], (std::vector<std::string>{"x\"y", "line\nbreak", "z"}));
}

TEST(CsvReaderTest, DetectsTabs) {
  CsvReader reader("a\tb\tc,d\n1\t2\t3\n");
  EXPECT_EQ(reader.delimiter(), '\t');
  CsvRecord record;
  ASSERT_TRUE(reader.Next(&record));
  EXPECT_EQ(record.fields[2], "c,d");
}

TEST(CsvReaderTest, UnterminatedQuoteIsMalformed) {
  CsvReader reader("a,\"b\n");
  CsvRecord record;
  ASSERT_TRUE(reader.Next(&record));
  EXPECT_TRUE(record.malformed);
}

TEST(CsvLineTest, EscapesAndRoundTrips) {
  const std::vector<std::string> fields = {"plain", "with,comma", "q\"uote", ""};
  const std::string line = CsvLine(fields);
  EXPECT_EQ(line, "plain,\"with,comma\",\"q\"\"uote\",\n");
  EXPECT_EQ(ReadAll(line)[0], fields);
}

TEST(FormatDoubleTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(1.0), "1");
  EXPECT_EQ(FormatDouble(std::nan("")), "nan");
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double v = UniformUnit(rng) * std::pow(10.0, static_cast<int>(UniformIndex(rng, 20)) - 10);
    EXPECT_EQ(std::strtod(FormatDouble(v).c_str(), nullptr), v);
  }
}

TEST(FileTest, WriteCreatesParentsAndReadsBack) {
  const auto dir = testing::TempDir("utils_file");
  const auto path = dir / "a" / "b" / "c.txt";
  ASSERT_TRUE(WriteFile(path, "hello\n").ok());
  EXPECT_EQ(*ReadFile(path), "hello\n");
  EXPECT_FALSE(ReadFile(dir / "missing").ok());
}

TEST(RandomTest, DeriveSeedSeparatesNamesAndIndices) {
  std::set<uint64_t> seeds;
  for (const char* name : {"holdout", "kfold", "fit"}) {
    for (uint64_t a = 0; a < 10; ++a) {
      for (uint64_t b = 0; b < 10; ++b) seeds.insert(DeriveSeed(42, name, {a, b}));
    }
  }
  EXPECT_EQ(seeds.size(), 300u);
  EXPECT_EQ(DeriveSeed(42, "x", {1}), DeriveSeed(42, "x", {1}));
  EXPECT_NE(DeriveSeed(42, "x", {1}), DeriveSeed(43, "x", {1}));
  EXPECT_NE(DeriveSeed(42, "x", {1, 0}), DeriveSeed(42, "x", {1}));
}

TEST(RandomTest, UniformIndexInRangeAndCoversValues) {
  Rng rng(1);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const uint64_t v = UniformIndex(rng, 7);
    ASSERT_LT(v, 7u);
    ++counts[v];
  }
  for (const int c : counts) EXPECT_GT(c, 850);
}

TEST(RandomTest, UniformUnitInHalfOpenInterval) {
  Rng rng(2);
  double sum = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double u = UniformUnit(rng);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 10000.0, 0.5, 0.02);
}

TEST(RandomTest, ShuffleIsPermutationAndDeterministic) {
  Rng a(9), b(9);
  const auto x = ShuffledIndices(100, a);
  const auto y = ShuffledIndices(100, b);
  EXPECT_EQ(x, y);
  std::vector<size_t> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  std::vector<size_t> iota(100);
  std::iota(iota.begin(), iota.end(), 0);
  EXPECT_EQ(sorted, iota);
  EXPECT_NE(x, iota);
}

TEST(RandomTest, SampleWithoutReplacementDistinct) {
  Rng rng(5);
  const auto s = SampleWithoutReplacement(50, 20, rng);
  ASSERT_EQ(s.size(), 20u);
  EXPECT_EQ(std::set<size_t>(s.begin(), s.end()).size(), 20u);
  for (const size_t v : s) EXPECT_LT(v, 50u);
  EXPECT_EQ(SampleWithoutReplacement(5, 5, rng).size(), 5u);
}

TEST(ParallelForTest, VisitsEveryIndexOnce) {
  for (const int workers : {1, 4}) {
    std::vector<std::atomic<int>> hits(257);
    ParallelFor(hits.size(), workers, [&](size_t i) { ++hits[i]; });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  }
  ParallelFor(0, 4, [](size_t) { FAIL(); });
}

TEST(StopwatchTest, Monotonic) {
  const Stopwatch watch;
  const double a = watch.ElapsedSeconds();
  const double b = watch.ElapsedSeconds();
  EXPECT_GE(a, 0.0);
  EXPECT_GE(b, a);
}

}  // namespace
}  // namespace idsbench::utils
