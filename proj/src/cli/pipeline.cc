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

#include "idsbench/cli/pipeline.h"

#include <map>
#include <memory>
#include <vector>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "idsbench/data/binary_cache.h"
#include "idsbench/data/loader.h"
#include "idsbench/data/preprocess.h"
#include "idsbench/eval/report.h"
#include "idsbench/eval/search.h"
#include "idsbench/eval/validation.h"
#include "idsbench/stats/stats_io.h"
#include "idsbench/utils/csv.h"
#include "idsbench/utils/parallel.h"
#include "idsbench/utils/random.h"
#include "idsbench/utils/status_macros.h"

namespace idsbench::cli {
namespace {

namespace fs = std::filesystem;

fs::path DataFile(const BenchmarkConfig& c, absl::string_view ds) {
  return c.output_dir / "data" / absl::StrCat(SafeName(ds), ".idsb");
}
fs::path LoadReportFile(const BenchmarkConfig& c, absl::string_view ds) {
  return c.output_dir / "data" / absl::StrCat(SafeName(ds), ".load.json");
}
std::string CellStem(absl::string_view ds, absl::string_view clf) {
  return absl::StrCat(SafeName(ds), "__", SafeName(clf));
}
fs::path ModelFile(const BenchmarkConfig& c, absl::string_view ds,
                   absl::string_view clf) {
  return c.output_dir / "models" / absl::StrCat(CellStem(ds, clf), ".json");
}
fs::path ReportFile(const BenchmarkConfig& c, absl::string_view ds,
                    absl::string_view clf, absl::string_view ext) {
  return c.output_dir / "reports" / absl::StrCat(CellStem(ds, clf), ext);
}
fs::path MatrixFile(const fs::path& out, eval::Metric m) {
  return out / "results" / absl::StrCat("matrix_", eval::MetricName(m), ".csv");
}

absl::Status WriteJson(const fs::path& path, const nlohmann::json& json) {
  return utils::WriteFile(path, json.dump(2) + "\n");
}

absl::StatusOr<nlohmann::json> ReadJson(const fs::path& path) {
  absl::StatusOr<std::string> text = utils::ReadFile(path);
  if (!text.ok()) return DataError(text.status());
  nlohmann::json json = nlohmann::json::parse(*text, nullptr, false);
  if (json.is_discarded()) {
    return DataError(absl::InvalidArgumentError(
        absl::StrCat(path.string(), " is not valid JSON")));
  }
  return json;
}

class Manifest {
 public:
  Manifest(const BenchmarkConfig& config, absl::string_view stage)
      : config_(config), stage_(stage) {
    json_ = {{"tool", "idsbench"},
             {"version", kToolVersion},
             {"stage", stage_},
             {"config", ConfigToJson(config)},
             {"stages", nlohmann::json::object()}};
  }

  void StageDone(absl::string_view stage, double seconds) {
    json_["stages"][std::string(stage)] = {{"wall_seconds", seconds}};
  }
  void Note(absl::string_view note) { json_["notes"].push_back(note); }
  nlohmann::json& json() { return json_; }

  absl::Status Write() const {
    return WriteJson(config_.output_dir / "manifest" /
                         absl::StrCat(stage_, ".json"),
                     json_);
  }

 private:
  const BenchmarkConfig& config_;
  std::string stage_;
  nlohmann::json json_;
};

// ---- ingest ----

struct IngestedDataset {
  data::Dataset dataset;
  nlohmann::json load_report;
};

absl::StatusOr<IngestedDataset> Ingest(const BenchmarkConfig& config,
                                       const DatasetConfig& ds_config) {
  absl::StatusOr<data::DatasetSchema> schema = data::BuiltinSchema(ds_config.schema);
  if (!schema.ok()) schema = data::LoadSchemaFile(ds_config.schema);
  if (!schema.ok()) {
    return ConfigError(absl::StrCat("[dataset.", ds_config.name, "] schema"),
                       schema.status().message());
  }
  data::LoadReport report;
  absl::StatusOr<data::Dataset> ds = data::LoadDataset(ds_config.path, *schema, &report);
  if (!ds.ok()) return DataError(ds.status());
  IngestedDataset out;
  out.load_report = {{"dataset", ds_config.name},
                     {"path", ds_config.path.string()},
                     {"schema", schema->name},
                     {"records_read", report.records_read},
                     {"rows_loaded", report.rows_loaded},
                     {"rows_excluded", report.rows_excluded},
                     {"rows_skipped", report.skipped.size()},
                     {"header_present", report.header_present},
                     {"warnings", report.warnings}};
  if (ds_config.sample_normal) {
    absl::StatusOr<data::Dataset> sampled = data::SampleStratified(
        *ds, *ds_config.sample_normal, *ds_config.sample_attack,
        SampleSeed(config, ds_config.name));
    if (!sampled.ok()) return DataError(sampled.status());
    ds = std::move(sampled);
    out.load_report["sample_seed"] = SampleSeed(config, ds_config.name);
  }
  out.load_report["rows"] = ds->num_rows();
  out.load_report["attack_rows"] = ds->CountLabel(data::kAttack);
  out.dataset = *std::move(ds);
  return out;
}

absl::Status WriteIngested(const BenchmarkConfig& config,
                           const DatasetConfig& ds_config,
                           const IngestedDataset& ingested) {
  RETURN_IF_ERROR(data::WriteBinaryCache(ingested.dataset,
                                         DataFile(config, ds_config.name)));
  return WriteJson(LoadReportFile(config, ds_config.name), ingested.load_report);
}

absl::StatusOr<data::Dataset> ReadIngested(const BenchmarkConfig& config,
                                           const DatasetConfig& ds_config) {
  absl::StatusOr<data::Dataset> ds =
      data::ReadBinaryCache(DataFile(config, ds_config.name));
  if (!ds.ok()) {
    return DataError(absl::Status(
        ds.status().code(),
        absl::StrCat(ds.status().message(), " (run the ingest stage first)")));
  }
  return ds;
}

// ---- train ----

struct TrainedCell {
  eval::ClassifierSpec spec;
  nlohmann::json model_file;
};

absl::StatusOr<TrainedCell> Train(const BenchmarkConfig& config,
                                  const DatasetConfig& ds_config,
                                  const ClassifierConfig& clf,
                                  const data::Dataset& ds) {
  TrainedCell cell;
  cell.spec = clf.spec;
  nlohmann::json search_json;
  if (clf.search) {
    const uint64_t seed = SearchSeed(config, ds_config.name, clf.name);
    ASSIGN_OR_RETURN(const eval::SearchResult result,
                     eval::RandomSearch(clf.spec, clf.search->space,
                                        clf.search->budget, ds, clf.search->k,
                                        seed));
    cell.spec = result.best;
    nlohmann::json draws = nlohmann::json::array();
    for (size_t i = 0; i < result.draws.size(); ++i) {
      nlohmann::json params = nlohmann::json::object();
      for (const auto& [name, value] : result.draws[i]) params[name] = value;
      draws.push_back({{"params", params}, {"cv_accuracy", result.scores[i]}});
    }
    search_json = {{"seed", seed},
                   {"k", clf.search->k},
                   {"draws", std::move(draws)},
                   {"best_cv_accuracy", result.best_score}};
  }
  const data::Preprocessor pre = data::Preprocessor::Fit(ds);
  ASSIGN_OR_RETURN(const data::FeatureMatrix matrix, pre.Transform(ds));
  const uint64_t seed = FinalModelSeed(config, ds_config.name, clf.name);
  ASSIGN_OR_RETURN(const std::unique_ptr<model::Model> model,
                   eval::TrainClassifier(cell.spec, matrix, seed));
  cell.model_file = eval::ModelToJson(*model, &cell.spec);
  cell.model_file["seed"] = seed;
  cell.model_file["dataset"] = ds_config.name;
  cell.model_file["classifier"] = clf.name;
  cell.model_file["preprocessor"] = pre.ToJson();
  if (clf.search) cell.model_file["search"] = std::move(search_json);
  return cell;
}

absl::StatusOr<eval::ClassifierSpec> ReadTrainedSpec(const BenchmarkConfig& config,
                                                     const DatasetConfig& ds_config,
                                                     const ClassifierConfig& clf) {
  ASSIGN_OR_RETURN(const nlohmann::json model,
                   ReadJson(ModelFile(config, ds_config.name, clf.name)));
  if (!model.contains("params")) {
    return DataError(absl::InvalidArgumentError(absl::StrCat(
        ModelFile(config, ds_config.name, clf.name).string(),
        " has no params block")));
  }
  eval::ClassifierSpec spec = clf.spec;
  RETURN_IF_ERROR(spec.ParamsFromJson(model["params"]));
  return spec;
}

// ---- evaluate ----

data::SplitPlan CellPlan(const BenchmarkConfig& config, absl::string_view ds) {
  data::SplitPlan plan = config.validation;
  plan.seed = ValidationSeed(config, ds);
  return plan;
}

absl::StatusOr<eval::ValidationReport> Evaluate(const BenchmarkConfig& config,
                                                const DatasetConfig& ds_config,
                                                const ClassifierConfig& clf,
                                                const eval::ClassifierSpec& spec,
                                                const data::Dataset& ds) {
  eval::ValidationOptions options;
  options.workers = config.workers;
  ASSIGN_OR_RETURN(eval::ValidationReport report,
                   eval::Validate(spec, ds, CellPlan(config, ds_config.name),
                                  ds_config.name, options));
  report.classifier = clf.name;
  return report;
}

absl::Status WriteCellReport(const BenchmarkConfig& config,
                             const eval::ValidationReport& report) {
  RETURN_IF_ERROR(utils::WriteFile(
      ReportFile(config, report.dataset, report.classifier, ".csv"),
      eval::ReportToCsv(report, config.timing)));
  return WriteJson(ReportFile(config, report.dataset, report.classifier, ".json"),
                   eval::ReportToJson(report, config.timing));
}

// Metrics that get a results matrix: the configured ones plus the timings.
std::vector<eval::Metric> MatrixMetrics(const BenchmarkConfig& config) {
  std::vector<eval::Metric> metrics = config.metrics;
  if (config.timing) {
    for (const eval::Metric m : {eval::Metric::kMbt, eval::Metric::kResponseTime}) {
      if (std::find(metrics.begin(), metrics.end(), m) == metrics.end()) {
        metrics.push_back(m);
      }
    }
  }
  return metrics;
}

bool IsTiming(eval::Metric m) {
  return m == eval::Metric::kMbt || m == eval::Metric::kResponseTime;
}

// Reports indexed [dataset][classifier] in config order.
using ReportGrid = std::vector<std::vector<eval::ValidationReport>>;

std::string MatrixCsv(const BenchmarkConfig& config, const ReportGrid& grid,
                      eval::Metric metric) {
  std::vector<std::string> header = {"dataset"};
  for (const ClassifierConfig& c : config.classifiers) header.push_back(c.name);
  std::string out = utils::CsvLine(header);
  for (size_t i = 0; i < config.datasets.size(); ++i) {
    std::vector<std::string> row = {config.datasets[i].name};
    for (const eval::ValidationReport& r : grid[i]) {
      row.push_back(eval::FormatMetric(r.mean.Get(metric)));
    }
    out += utils::CsvLine(row);
  }
  return out;
}

absl::Status WriteResults(const BenchmarkConfig& config, const ReportGrid& grid) {
  std::string rounds = eval::ReportCsvHeader();
  for (const auto& row : grid) {
    for (const eval::ValidationReport& r : row) {
      rounds += eval::ReportCsvRows(r, config.timing);
    }
  }
  RETURN_IF_ERROR(
      utils::WriteFile(config.output_dir / "results" / "rounds.csv", rounds));
  for (const eval::Metric m : MatrixMetrics(config)) {
    RETURN_IF_ERROR(
        utils::WriteFile(MatrixFile(config.output_dir, m), MatrixCsv(config, grid, m)));
  }
  return absl::OkStatus();
}

// ---- stats ----

stats::Direction DirectionOf(eval::Metric m) {
  return eval::LowerIsBetter(m) ? stats::Direction::kLowerBetter
                                : stats::Direction::kHigherBetter;
}

// Builds the matrix of one metric from the grid; nullopt with a note if a
// cell is undefined.
std::optional<stats::ResultsMatrix> GridMatrix(const BenchmarkConfig& config,
                                               const ReportGrid& grid,
                                               eval::Metric metric,
                                               std::vector<std::string>* notes) {
  stats::ResultsMatrix m;
  m.direction = DirectionOf(metric);
  for (const ClassifierConfig& c : config.classifiers) m.classifiers.push_back(c.name);
  for (size_t i = 0; i < config.datasets.size(); ++i) {
    m.datasets.push_back(config.datasets[i].name);
    std::vector<double> row;
    for (const eval::ValidationReport& r : grid[i]) {
      const std::optional<double> v = r.mean.Get(metric);
      if (!v) {
        notes->push_back(
            absl::StrCat(eval::MetricName(metric), ": undefined cells; no rank tests"));
        return std::nullopt;
      }
      row.push_back(*v);
    }
    m.values.push_back(std::move(row));
  }
  return m;
}

absl::Status WriteStatsOutputs(const fs::path& out,
                               const std::vector<stats::TestReport>& reports,
                               const std::vector<std::string>& notes) {
  RETURN_IF_ERROR(utils::WriteFile(out / "stats" / "friedman.csv",
                                   stats::FriedmanTableCsv(reports)));
  RETURN_IF_ERROR(utils::WriteFile(out / "stats" / "nemenyi.csv",
                                   stats::NemenyiTableCsv(reports)));
  RETURN_IF_ERROR(utils::WriteFile(out / "stats" / "mean_ranks.csv",
                                   stats::MeanRanksCsv(reports)));
  nlohmann::json tests = nlohmann::json::array();
  for (const stats::TestReport& r : reports) tests.push_back(stats::TestReportToJson(r));
  return WriteJson(out / "stats" / "stats.json",
                   {{"tests", std::move(tests)}, {"notes", notes}});
}

// Runs the rank tests of every matrix that qualifies.
absl::Status StatsFromMatrices(
    const BenchmarkConfig& config,
    const std::vector<std::pair<eval::Metric, std::optional<stats::ResultsMatrix>>>&
        matrices,
    std::vector<std::string> notes) {
  std::vector<stats::TestReport> reports;
  if (config.datasets.size() < 2 || config.classifiers.size() < 2) {
    notes.push_back("rank tests need at least 2 datasets and 2 classifiers");
  } else {
    for (const auto& [metric, matrix] : matrices) {
      if (!matrix) continue;
      absl::StatusOr<stats::TestReport> r = stats::RunRankTests(
          *matrix, eval::MetricName(metric), config.alphas);
      if (!r.ok()) {
        notes.push_back(absl::StrCat(eval::MetricName(metric), ": ",
                                     r.status().message()));
        continue;
      }
      reports.push_back(*std::move(r));
    }
  }
  return WriteStatsOutputs(config.output_dir, reports, notes);
}

std::vector<eval::Metric> StatsMetrics(const BenchmarkConfig& config) {
  std::vector<eval::Metric> metrics;
  for (const eval::Metric m : config.metrics) {
    if (!IsTiming(m) || config.timing) metrics.push_back(m);
  }
  return metrics;
}

// ---- report ----

absl::Status WriteFinalReport(const BenchmarkConfig& config, const ReportGrid& grid,
                              const nlohmann::json& stats_json) {
  const fs::path dir = config.output_dir / "report";
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& row : grid) {
    for (const eval::ValidationReport& r : row) {
      cells.push_back({{"dataset", r.dataset},
                       {"classifier", r.classifier},
                       {"params", r.params},
                       {"mean", eval::MetricSetToJson(r.mean, config.timing)}});
    }
  }
  RETURN_IF_ERROR(WriteJson(dir / "summary.json",
                            {{"cells", std::move(cells)}, {"stats", stats_json}}));
  // Per-classifier averages over datasets, as plotted per metric.
  for (const eval::Metric m : config.metrics) {
    if (IsTiming(m)) continue;
    std::vector<std::string> header = {"classifier"};
    for (const DatasetConfig& ds : config.datasets) header.push_back(ds.name);
    header.push_back("average");
    std::string csv = utils::CsvLine(header);
    for (size_t j = 0; j < config.classifiers.size(); ++j) {
      std::vector<std::string> row = {config.classifiers[j].name};
      double sum = 0.0;
      bool defined = true;
      for (size_t i = 0; i < config.datasets.size(); ++i) {
        const std::optional<double> v = grid[i][j].mean.Get(m);
        row.push_back(eval::FormatMetric(v));
        if (v) {
          sum += *v;
        } else {
          defined = false;
        }
      }
      row.push_back(eval::FormatMetric(
          defined ? std::optional<double>(
                        sum / static_cast<double>(config.datasets.size()))
                  : std::nullopt));
      csv += utils::CsvLine(row);
    }
    RETURN_IF_ERROR(utils::WriteFile(
        dir / absl::StrCat("plot_", eval::MetricName(m), ".csv"), csv));
  }
  if (config.timing) {
    std::string csv = utils::CsvLine({"dataset", "classifier", "mbt_s", "resp_s"});
    for (const auto& row : grid) {
      for (const eval::ValidationReport& r : row) {
        csv += utils::CsvLine({r.dataset, r.classifier,
                               utils::FormatDouble(r.mean.mbt_seconds),
                               utils::FormatDouble(r.mean.avg_response_seconds)});
      }
    }
    RETURN_IF_ERROR(utils::WriteFile(dir / "timing.csv", csv));
  }
  return absl::OkStatus();
}

absl::StatusOr<ReportGrid> ReadReportGrid(const BenchmarkConfig& config) {
  ReportGrid grid(config.datasets.size());
  for (size_t i = 0; i < config.datasets.size(); ++i) {
    for (const ClassifierConfig& c : config.classifiers) {
      const fs::path path = ReportFile(config, config.datasets[i].name, c.name, ".json");
      if (!fs::exists(path)) {
        return DataError(absl::NotFoundError(absl::StrCat(
            "FileNotFound: ", path.string(), " (run the evaluate stage first)")));
      }
      ASSIGN_OR_RETURN(const nlohmann::json json, ReadJson(path));
      absl::StatusOr<eval::ValidationReport> report = eval::ReportFromJson(json);
      if (!report.ok()) return DataError(report.status());
      grid[i].push_back(*std::move(report));
    }
  }
  return grid;
}

template <typename Fn>
absl::Status Timed(Manifest& manifest, absl::string_view stage, Fn&& fn) {
  const utils::Stopwatch watch;
  absl::Status status = fn();
  manifest.StageDone(stage, watch.ElapsedSeconds());
  return status;
}

nlohmann::json CellManifest(const BenchmarkConfig& config, const DatasetConfig& ds,
                            const ClassifierConfig& clf,
                            const eval::ClassifierSpec& spec) {
  nlohmann::json cell = {
      {"dataset", ds.name},
      {"classifier", clf.name},
      {"kind", model::ModelKindName(spec.kind)},
      {"params", spec.ParamsToJson()},
      {"plan", eval::SplitPlanToJson(CellPlan(config, ds.name))},
      {"final_model_seed", FinalModelSeed(config, ds.name, clf.name)}};
  if (clf.search) cell["search_seed"] = SearchSeed(config, ds.name, clf.name);
  return cell;
}

}  // namespace

int ExitCode(const absl::Status& status) {
  if (status.ok()) return 0;
  if (absl::StartsWith(status.message(), "ConfigInvalid:")) return 2;
  if (absl::StartsWith(status.message(), "DataError:")) return 3;
  return 1;
}

absl::Status DataError(const absl::Status& status) {
  if (status.ok() || absl::StartsWith(status.message(), "DataError:") ||
      absl::StartsWith(status.message(), "ConfigInvalid:")) {
    return status;
  }
  return absl::Status(status.code(), absl::StrCat("DataError: ", status.message()));
}

std::string SafeName(absl::string_view name) {
  std::string out;
  for (const char ch : name) {
    const bool keep = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                      (ch >= '0' && ch <= '9') || ch == '.' || ch == '-' ||
                      ch == '+' || ch == '_';
    out.push_back(keep ? ch : '_');
  }
  return out;
}

uint64_t SampleSeed(const BenchmarkConfig& config, absl::string_view dataset) {
  return utils::DeriveSeed(config.master_seed, absl::StrCat("sample/", dataset));
}

uint64_t ValidationSeed(const BenchmarkConfig& config, absl::string_view dataset) {
  return utils::DeriveSeed(config.master_seed, absl::StrCat("validation/", dataset));
}

uint64_t SearchSeed(const BenchmarkConfig& config, absl::string_view dataset,
                    absl::string_view classifier) {
  return utils::DeriveSeed(config.master_seed,
                           absl::StrCat("search/", dataset, "/", classifier));
}

uint64_t FinalModelSeed(const BenchmarkConfig& config, absl::string_view dataset,
                        absl::string_view classifier) {
  return utils::DeriveSeed(config.master_seed,
                           absl::StrCat("final/", dataset, "/", classifier));
}

absl::Status RunIngest(const BenchmarkConfig& config) {
  RETURN_IF_ERROR(config.Validate(/*check_paths=*/true));
  Manifest manifest(config, "ingest");
  RETURN_IF_ERROR(Timed(manifest, "ingest", [&]() -> absl::Status {
    for (const DatasetConfig& ds : config.datasets) {
      ASSIGN_OR_RETURN(const IngestedDataset ingested, Ingest(config, ds));
      RETURN_IF_ERROR(WriteIngested(config, ds, ingested));
      manifest.json()["datasets"].push_back(ingested.load_report);
    }
    return absl::OkStatus();
  }));
  return manifest.Write();
}

absl::Status RunTrain(const BenchmarkConfig& config) {
  RETURN_IF_ERROR(config.Validate(/*check_paths=*/false));
  Manifest manifest(config, "train");
  RETURN_IF_ERROR(Timed(manifest, "train", [&]() -> absl::Status {
    for (const DatasetConfig& ds_config : config.datasets) {
      ASSIGN_OR_RETURN(const data::Dataset ds, ReadIngested(config, ds_config));
      for (const ClassifierConfig& clf : config.classifiers) {
        ASSIGN_OR_RETURN(const TrainedCell cell, Train(config, ds_config, clf, ds));
        RETURN_IF_ERROR(WriteJson(ModelFile(config, ds_config.name, clf.name),
                                  cell.model_file));
        manifest.json()["cells"].push_back(
            CellManifest(config, ds_config, clf, cell.spec));
      }
    }
    return absl::OkStatus();
  }));
  return manifest.Write();
}

absl::Status RunEvaluate(const BenchmarkConfig& config) {
  RETURN_IF_ERROR(config.Validate(/*check_paths=*/false));
  Manifest manifest(config, "evaluate");
  RETURN_IF_ERROR(Timed(manifest, "evaluate", [&]() -> absl::Status {
    ReportGrid grid(config.datasets.size());
    for (size_t i = 0; i < config.datasets.size(); ++i) {
      const DatasetConfig& ds_config = config.datasets[i];
      ASSIGN_OR_RETURN(const data::Dataset ds, ReadIngested(config, ds_config));
      for (const ClassifierConfig& clf : config.classifiers) {
        ASSIGN_OR_RETURN(const eval::ClassifierSpec spec,
                         ReadTrainedSpec(config, ds_config, clf));
        ASSIGN_OR_RETURN(eval::ValidationReport report,
                         Evaluate(config, ds_config, clf, spec, ds));
        RETURN_IF_ERROR(WriteCellReport(config, report));
        manifest.json()["cells"].push_back(CellManifest(config, ds_config, clf, spec));
        grid[i].push_back(std::move(report));
      }
    }
    return WriteResults(config, grid);
  }));
  return manifest.Write();
}

absl::Status RunStats(const BenchmarkConfig& config) {
  RETURN_IF_ERROR(config.Validate(/*check_paths=*/false));
  Manifest manifest(config, "stats");
  RETURN_IF_ERROR(Timed(manifest, "stats", [&]() -> absl::Status {
    std::vector<std::pair<eval::Metric, std::optional<stats::ResultsMatrix>>> matrices;
    std::vector<std::string> notes;
    for (const eval::Metric m : StatsMetrics(config)) {
      const fs::path path = MatrixFile(config.output_dir, m);
      absl::StatusOr<std::string> text = utils::ReadFile(path);
      if (!text.ok()) {
        return DataError(absl::Status(
            text.status().code(),
            absl::StrCat(text.status().message(), " (run the evaluate stage first)")));
      }
      if (absl::StrContains(*text, eval::kUndefined)) {
        notes.push_back(absl::StrCat(eval::MetricName(m),
                                     ": undefined cells; no rank tests"));
        matrices.emplace_back(m, std::nullopt);
        continue;
      }
      if (config.datasets.size() < 2 || config.classifiers.size() < 2) {
        matrices.emplace_back(m, std::nullopt);
        continue;
      }
      absl::StatusOr<stats::ResultsMatrix> matrix =
          stats::ParseResultsMatrixCsv(*text, DirectionOf(m));
      if (!matrix.ok()) return DataError(matrix.status());
      matrices.emplace_back(m, *std::move(matrix));
    }
    return StatsFromMatrices(config, matrices, std::move(notes));
  }));
  return manifest.Write();
}

absl::Status RunReport(const BenchmarkConfig& config) {
  RETURN_IF_ERROR(config.Validate(/*check_paths=*/false));
  Manifest manifest(config, "report");
  RETURN_IF_ERROR(Timed(manifest, "report", [&]() -> absl::Status {
    ASSIGN_OR_RETURN(const ReportGrid grid, ReadReportGrid(config));
    const fs::path stats_path = config.output_dir / "stats" / "stats.json";
    if (!fs::exists(stats_path)) {
      return DataError(absl::NotFoundError(absl::StrCat(
          "FileNotFound: ", stats_path.string(), " (run the stats stage first)")));
    }
    ASSIGN_OR_RETURN(const nlohmann::json stats_json, ReadJson(stats_path));
    return WriteFinalReport(config, grid, stats_json);
  }));
  return manifest.Write();
}

absl::Status RunBenchmark(const BenchmarkConfig& config) {
  RETURN_IF_ERROR(config.Validate(/*check_paths=*/true));
  Manifest manifest(config, "run");
  std::vector<data::Dataset> datasets;
  RETURN_IF_ERROR(Timed(manifest, "ingest", [&]() -> absl::Status {
    for (const DatasetConfig& ds : config.datasets) {
      ASSIGN_OR_RETURN(IngestedDataset ingested, Ingest(config, ds));
      RETURN_IF_ERROR(WriteIngested(config, ds, ingested));
      manifest.json()["datasets"].push_back(ingested.load_report);
      datasets.push_back(std::move(ingested.dataset));
    }
    return absl::OkStatus();
  }));
  std::vector<std::vector<eval::ClassifierSpec>> specs(config.datasets.size());
  RETURN_IF_ERROR(Timed(manifest, "train", [&]() -> absl::Status {
    for (size_t i = 0; i < config.datasets.size(); ++i) {
      for (const ClassifierConfig& clf : config.classifiers) {
        ASSIGN_OR_RETURN(TrainedCell cell,
                         Train(config, config.datasets[i], clf, datasets[i]));
        RETURN_IF_ERROR(WriteJson(ModelFile(config, config.datasets[i].name, clf.name),
                                  cell.model_file));
        manifest.json()["cells"].push_back(
            CellManifest(config, config.datasets[i], clf, cell.spec));
        specs[i].push_back(std::move(cell.spec));
      }
    }
    return absl::OkStatus();
  }));
  ReportGrid grid(config.datasets.size());
  RETURN_IF_ERROR(Timed(manifest, "evaluate", [&]() -> absl::Status {
    for (size_t i = 0; i < config.datasets.size(); ++i) {
      for (size_t j = 0; j < config.classifiers.size(); ++j) {
        ASSIGN_OR_RETURN(eval::ValidationReport report,
                         Evaluate(config, config.datasets[i], config.classifiers[j],
                                  specs[i][j], datasets[i]));
        RETURN_IF_ERROR(WriteCellReport(config, report));
        grid[i].push_back(std::move(report));
      }
    }
    return WriteResults(config, grid);
  }));
  RETURN_IF_ERROR(Timed(manifest, "stats", [&]() -> absl::Status {
    std::vector<std::pair<eval::Metric, std::optional<stats::ResultsMatrix>>> matrices;
    std::vector<std::string> notes;
    for (const eval::Metric m : StatsMetrics(config)) {
      matrices.emplace_back(m, GridMatrix(config, grid, m, &notes));
    }
    return StatsFromMatrices(config, matrices, std::move(notes));
  }));
  RETURN_IF_ERROR(Timed(manifest, "report", [&]() -> absl::Status {
    ASSIGN_OR_RETURN(const nlohmann::json stats_json,
                     ReadJson(config.output_dir / "stats" / "stats.json"));
    return WriteFinalReport(config, grid, stats_json);
  }));
  return manifest.Write();
}

absl::Status RunStatsOnMatrix(const fs::path& matrix_csv, absl::string_view metric,
                              stats::Direction direction,
                              const std::vector<double>& alphas,
                              const fs::path& output_dir) {
  absl::StatusOr<std::string> text = utils::ReadFile(matrix_csv);
  if (!text.ok()) return DataError(text.status());
  absl::StatusOr<stats::ResultsMatrix> matrix =
      stats::ParseResultsMatrixCsv(*text, direction);
  if (!matrix.ok()) return DataError(matrix.status());
  ASSIGN_OR_RETURN(stats::TestReport report,
                   stats::RunRankTests(*matrix, metric, alphas));
  return WriteStatsOutputs(output_dir, {std::move(report)}, {});
}

}  // namespace idsbench::cli
