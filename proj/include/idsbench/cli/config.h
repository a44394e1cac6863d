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

// Benchmark configuration in INI form.
//
//   [benchmark]
//   version = 1
//   master_seed = 42
//   output_dir = out            ; relative to the config file
//   workers = 1
//   profile = full              ; or desk (RF 100 trees, ETC 200 trees)
//   metrics = accuracy,specificity,sensitivity,fpr,auc
//   alphas = 0.05,0.1
//   timing = true
//
//   [validation]
//   kind = holdout              ; or kfold
//   train_fraction = 0.6
//   k = 10
//   rounds = 100
//   repeats = 10
//   stratified = false
//
//   [dataset.<name>]
//   path = flows.csv
//   schema = cidds001           ; built-in name or a .schema file
//   sample_normal = 1000        ; optional, with sample_attack
//   sample_attack = 1000
//
//   [classifier.<name>]
//   kind = RF                   ; defaults to <name>
//   n_estimators = 100          ; any hyperparameter of the kind
//   search.max_depth = int:2:30 ; optional random search space
//   search_budget = 10
//   search_k = 3
//
// Unknown sections and keys are errors. Keys of [benchmark] and
// [validation] can be overridden by environment variables named
// IDSBENCH_<SECTION>_<KEY>, e.g. IDSBENCH_VALIDATION_ROUNDS=1.

#ifndef IDSBENCH_CLI_CONFIG_H_
#define IDSBENCH_CLI_CONFIG_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "idsbench/data/sampling.h"
#include "idsbench/eval/classifier.h"
#include "idsbench/eval/metrics.h"
#include "idsbench/eval/search.h"

namespace idsbench::cli {

inline constexpr int kConfigVersion = 1;
inline constexpr absl::string_view kEnvPrefix = "IDSBENCH_";

struct DatasetConfig {
  std::string name;
  std::filesystem::path path;
  std::string schema;
  std::optional<size_t> sample_normal;
  std::optional<size_t> sample_attack;
};

struct SearchConfig {
  eval::ParamSpace space;
  int budget = 10;
  int k = 3;
};

struct ClassifierConfig {
  std::string name;
  eval::ClassifierSpec spec;
  std::optional<SearchConfig> search;
};

enum class Profile { kFull, kDesk };

struct BenchmarkConfig {
  uint64_t master_seed = 0;
  std::filesystem::path output_dir = "idsbench_out";
  int workers = 1;
  Profile profile = Profile::kFull;
  std::vector<eval::Metric> metrics = {std::begin(eval::kQualityMetrics),
                                       std::end(eval::kQualityMetrics)};
  std::vector<double> alphas = {0.05, 0.1};
  bool timing = true;
  // The seed field is unused; seeds are derived from master_seed.
  data::SplitPlan validation;
  std::vector<DatasetConfig> datasets;
  std::vector<ClassifierConfig> classifiers;

  // Errors are ConfigInvalid. With `check_paths`, dataset files must exist.
  absl::Status Validate(bool check_paths) const;
};

// Environment variables with the IDSBENCH_ prefix.
std::map<std::string, std::string> EnvironmentOverrides();

// Parses INI text. Relative paths resolve against `base_dir`.
absl::StatusOr<BenchmarkConfig> ParseConfig(
    absl::string_view text, const std::filesystem::path& base_dir,
    const std::map<std::string, std::string>& env = {});

absl::StatusOr<BenchmarkConfig> LoadConfig(
    const std::filesystem::path& path,
    const std::map<std::string, std::string>& env = {});

// Comma separated lists.
absl::StatusOr<std::vector<eval::Metric>> ParseMetricList(absl::string_view text);
absl::StatusOr<std::vector<double>> ParseAlphaList(absl::string_view text);

// Canonical JSON echo of the configuration.
nlohmann::json ConfigToJson(const BenchmarkConfig& config);

absl::Status ConfigError(absl::string_view where, absl::string_view reason);

}  // namespace idsbench::cli

#endif  // IDSBENCH_CLI_CONFIG_H_
