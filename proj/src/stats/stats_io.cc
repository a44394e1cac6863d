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

#include "idsbench/stats/stats_io.h"

#include <algorithm>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "idsbench/utils/csv.h"
#include "idsbench/utils/status_macros.h"

namespace idsbench::stats {
namespace {

std::vector<std::string> AlphaColumns(std::span<const double> alphas) {
  std::vector<std::string> columns;
  for (const double a : alphas) {
    columns.push_back(absl::StrCat("alpha_", utils::FormatDouble(a)));
  }
  return columns;
}

void AppendMarks(const std::vector<AlphaDecision>& decisions,
                 std::vector<std::string>* fields) {
  for (const AlphaDecision& d : decisions) {
    fields->emplace_back(DecisionMark(d.decision));
  }
}

nlohmann::json DecisionsJson(const std::vector<AlphaDecision>& decisions) {
  nlohmann::json out = nlohmann::json::array();
  for (const AlphaDecision& d : decisions) {
    out.push_back({{"alpha", d.alpha}, {"decision", DecisionMark(d.decision)}});
  }
  return out;
}

}  // namespace

absl::StatusOr<ResultsMatrix> ParseResultsMatrixCsv(absl::string_view text,
                                                    Direction direction) {
  utils::CsvReader reader{std::string(text)};
  utils::CsvRecord record;
  ResultsMatrix m;
  m.direction = direction;
  if (!reader.Next(&record) || record.fields.size() < 2) {
    return absl::InvalidArgumentError(
        "results matrix needs a header row with classifier names");
  }
  m.classifiers.assign(record.fields.begin() + 1, record.fields.end());
  while (reader.Next(&record)) {
    if (record.fields.size() == 1 && record.fields[0].empty()) continue;
    if (record.malformed || record.fields.size() != m.classifiers.size() + 1) {
      return absl::InvalidArgumentError(absl::StrCat(
          "results matrix line ", record.line, " has ", record.fields.size(),
          " fields, expected ", m.classifiers.size() + 1));
    }
    m.datasets.push_back(record.fields[0]);
    std::vector<double> row;
    for (size_t j = 1; j < record.fields.size(); ++j) {
      double v;
      if (!absl::SimpleAtod(record.fields[j], &v)) {
        return absl::InvalidArgumentError(absl::StrCat(
            "results matrix line ", record.line, ": bad value '",
            record.fields[j], "'"));
      }
      row.push_back(v);
    }
    m.values.push_back(std::move(row));
  }
  RETURN_IF_ERROR(m.Validate());
  return m;
}

std::string ResultsMatrixToCsv(const ResultsMatrix& m) {
  std::vector<std::string> header = {"dataset"};
  header.insert(header.end(), m.classifiers.begin(), m.classifiers.end());
  std::string out = utils::CsvLine(header);
  for (size_t i = 0; i < m.values.size(); ++i) {
    std::vector<std::string> fields = {m.datasets[i]};
    for (const double v : m.values[i]) fields.push_back(utils::FormatDouble(v));
    out += utils::CsvLine(fields);
  }
  return out;
}

absl::StatusOr<TestReport> RunRankTests(const ResultsMatrix& results,
                                        absl::string_view metric,
                                        std::span<const double> alphas,
                                        bool always_post_hoc) {
  TestReport report;
  report.metric = std::string(metric);
  report.results = results;
  report.alphas.assign(alphas.begin(), alphas.end());
  ASSIGN_OR_RETURN(report.ranks, RankRows(results));
  ASSIGN_OR_RETURN(report.friedman, Friedman(report.ranks, alphas));
  const bool rejected = std::any_of(
      report.friedman.decisions.begin(), report.friedman.decisions.end(),
      [](const AlphaDecision& d) { return d.decision == Decision::kReject; });
  if (rejected || always_post_hoc) {
    ASSIGN_OR_RETURN(report.nemenyi,
                     Nemenyi(report.ranks.mean_ranks, report.ranks.d(), alphas));
  }
  return report;
}

std::string FriedmanTableCsv(std::span<const TestReport> reports) {
  std::vector<std::string> header = {"metric", "f_statistic", "p_value"};
  if (!reports.empty()) {
    for (std::string& c : AlphaColumns(reports[0].alphas)) header.push_back(c);
  }
  std::string out = utils::CsvLine(header);
  for (const TestReport& r : reports) {
    std::vector<std::string> fields = {
        r.metric, utils::FormatDouble(r.friedman.f_statistic),
        utils::FormatDouble(r.friedman.p_value)};
    AppendMarks(r.friedman.decisions, &fields);
    out += utils::CsvLine(fields);
  }
  return out;
}

std::string NemenyiTableCsv(std::span<const TestReport> reports) {
  std::vector<std::string> header = {"metric", "pair", "gamma", "p_value"};
  if (!reports.empty()) {
    for (std::string& c : AlphaColumns(reports[0].alphas)) header.push_back(c);
  }
  std::string out = utils::CsvLine(header);
  for (const TestReport& r : reports) {
    if (!r.nemenyi) continue;
    for (const NemenyiPair& p : r.nemenyi->pairs) {
      std::vector<std::string> fields = {
          r.metric,
          absl::StrCat(r.results.classifiers[p.x], "-", r.results.classifiers[p.y]),
          utils::FormatDouble(p.gamma), utils::FormatDouble(p.p_adjusted)};
      AppendMarks(p.decisions, &fields);
      out += utils::CsvLine(fields);
    }
  }
  return out;
}

std::string MeanRanksCsv(std::span<const TestReport> reports) {
  std::vector<std::string> header = {"metric"};
  if (!reports.empty()) {
    header.insert(header.end(), reports[0].results.classifiers.begin(),
                  reports[0].results.classifiers.end());
  }
  std::string out = utils::CsvLine(header);
  for (const TestReport& r : reports) {
    std::vector<std::string> fields = {r.metric};
    for (const double v : r.ranks.mean_ranks) {
      fields.push_back(utils::FormatDouble(v));
    }
    out += utils::CsvLine(fields);
  }
  return out;
}

nlohmann::json TestReportToJson(const TestReport& report) {
  nlohmann::json json = {
      {"metric", report.metric},
      {"direction", DirectionName(report.results.direction)},
      {"datasets", report.results.datasets},
      {"classifiers", report.results.classifiers},
      {"values", report.results.values},
      {"ranks", report.ranks.ranks},
      {"mean_ranks", report.ranks.mean_ranks},
      {"friedman",
       {{"d", report.friedman.d},
        {"k", report.friedman.k},
        {"q", report.friedman.q},
        {"f_statistic", report.friedman.f_statistic},
        {"df1", report.friedman.df1},
        {"df2", report.friedman.df2},
        {"p_value", report.friedman.p_value},
        {"decisions", DecisionsJson(report.friedman.decisions)}}}};
  if (report.nemenyi) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const NemenyiPair& p : report.nemenyi->pairs) {
      pairs.push_back({{"x", report.results.classifiers[p.x]},
                       {"y", report.results.classifiers[p.y]},
                       {"gamma", p.gamma},
                       {"p_adjusted", p.p_adjusted},
                       {"decisions", DecisionsJson(p.decisions)}});
    }
    json["nemenyi"] = std::move(pairs);
  }
  return json;
}

}  // namespace idsbench::stats
