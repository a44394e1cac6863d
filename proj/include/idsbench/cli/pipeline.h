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

// Benchmark stages and the files they exchange under the output directory:
//
//   ingest    data/<dataset>.idsb            binary dataset cache
//             data/<dataset>.load.json       loader report
//   train     models/<dataset>__<clf>.json   model, resolved params, search
//   evaluate  reports/<dataset>__<clf>.csv   one row per validation round
//             reports/<dataset>__<clf>.json  report with repeat and grand means
//             results/rounds.csv             all rounds of all cells
//             results/matrix_<metric>.csv    datasets x classifiers means
//   stats     stats/friedman.csv, stats/nemenyi.csv, stats/mean_ranks.csv,
//             stats/stats.json
//   report    report/summary.json, report/plot_<metric>.csv,
//             report/timing.csv
//
// Each stage also writes manifest/<stage>.json with seeds and wall times.
// RunBenchmark performs all stages in memory and writes the same files;
// apart from timing columns and manifests the outputs are identical to the
// staged run.
//
// Seeds, all derived from master_seed:
//   sample/<dataset>              stratified sampling at ingest
//   validation/<dataset>          split plan seed, shared by all classifiers
//   search/<dataset>/<clf>        random search draws and folds
//   final/<dataset>/<clf>         the model written by train

#ifndef IDSBENCH_CLI_PIPELINE_H_
#define IDSBENCH_CLI_PIPELINE_H_

#include <filesystem>
#include <string>

#include "absl/status/status.h"
#include "idsbench/cli/config.h"
#include "idsbench/stats/ranking.h"

namespace idsbench::cli {

inline constexpr absl::string_view kToolVersion = "1.0.0";

// 0 for OK, 2 for ConfigInvalid, 3 for DataError, 1 otherwise.
int ExitCode(const absl::Status& status);

// Prefixes the message with "DataError: " unless already present.
absl::Status DataError(const absl::Status& status);

// File-name-safe form of a dataset or classifier name.
std::string SafeName(absl::string_view name);

uint64_t SampleSeed(const BenchmarkConfig& config, absl::string_view dataset);
uint64_t ValidationSeed(const BenchmarkConfig& config, absl::string_view dataset);
uint64_t SearchSeed(const BenchmarkConfig& config, absl::string_view dataset,
                    absl::string_view classifier);
uint64_t FinalModelSeed(const BenchmarkConfig& config, absl::string_view dataset,
                        absl::string_view classifier);

absl::Status RunIngest(const BenchmarkConfig& config);
absl::Status RunTrain(const BenchmarkConfig& config);
absl::Status RunEvaluate(const BenchmarkConfig& config);
absl::Status RunStats(const BenchmarkConfig& config);
absl::Status RunReport(const BenchmarkConfig& config);
absl::Status RunBenchmark(const BenchmarkConfig& config);

// Rank tests on an externally produced results matrix CSV; writes the
// stats/ files under `output_dir`.
absl::Status RunStatsOnMatrix(const std::filesystem::path& matrix_csv,
                              absl::string_view metric,
                              stats::Direction direction,
                              const std::vector<double>& alphas,
                              const std::filesystem::path& output_dir);

}  // namespace idsbench::cli

#endif  // IDSBENCH_CLI_PIPELINE_H_
