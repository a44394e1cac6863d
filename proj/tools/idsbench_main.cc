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

// idsbench command line: benchmark stages over an INI configuration, plus
// rank tests on a standalone results matrix.

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "idsbench/cli/config.h"
#include "idsbench/cli/pipeline.h"
#include "idsbench/eval/metrics.h"

namespace {

namespace cli = idsbench::cli;

struct CommonFlags {
  std::string config;
  std::optional<uint64_t> seed;
  std::optional<int> workers;
  std::string out;
  std::string metrics;
  std::string alphas;
  bool desk_scale = false;
};

void AddCommonFlags(CLI::App* app, CommonFlags* flags, bool config_required) {
  CLI::Option* config = app->add_option("--config", flags->config,
                                        "Benchmark configuration (INI)");
  if (config_required) config->required();
  app->add_option("--seed", flags->seed, "Override the master seed");
  app->add_option("--workers", flags->workers, "Worker threads");
  app->add_option("--out", flags->out, "Output directory");
  app->add_option("--metric", flags->metrics,
                  "Comma separated metrics, e.g. accuracy,auc");
  app->add_option("--alpha", flags->alphas, "Comma separated significance levels");
  app->add_flag("--desk-scale", flags->desk_scale,
                "Reduced ensembles (RF 100 trees, ETC 200 trees)");
}

absl::StatusOr<cli::BenchmarkConfig> ResolveConfig(const CommonFlags& flags) {
  std::map<std::string, std::string> env = cli::EnvironmentOverrides();
  const std::string prefix = absl::StrCat(cli::kEnvPrefix, "BENCHMARK_");
  if (flags.seed) env[prefix + "MASTER_SEED"] = absl::StrCat(*flags.seed);
  if (flags.workers) env[prefix + "WORKERS"] = absl::StrCat(*flags.workers);
  if (!flags.metrics.empty()) env[prefix + "METRICS"] = flags.metrics;
  if (!flags.alphas.empty()) env[prefix + "ALPHAS"] = flags.alphas;
  if (flags.desk_scale) env[prefix + "PROFILE"] = "desk";
  absl::StatusOr<cli::BenchmarkConfig> config = cli::LoadConfig(flags.config, env);
  if (!config.ok()) return config;
  if (!flags.out.empty()) config->output_dir = std::filesystem::absolute(flags.out);
  return config;
}

int Report(const absl::Status& status) {
  if (!status.ok()) std::cerr << "idsbench: " << status.message() << "\n";
  return cli::ExitCode(status);
}

int RunStage(const CommonFlags& flags,
             absl::Status (*stage)(const cli::BenchmarkConfig&)) {
  absl::StatusOr<cli::BenchmarkConfig> config = ResolveConfig(flags);
  if (!config.ok()) return Report(config.status());
  return Report(stage(*config));
}

int RunMatrixStats(const CommonFlags& flags, const std::string& input,
                   const std::string& direction) {
  if (flags.out.empty()) {
    return Report(cli::ConfigError("--out", "required with --input"));
  }
  const std::string metric_text = flags.metrics.empty() ? "accuracy" : flags.metrics;
  absl::StatusOr<idsbench::eval::Metric> metric = idsbench::eval::ParseMetric(metric_text);
  if (!metric.ok()) return Report(cli::ConfigError("--metric", metric.status().message()));
  idsbench::stats::Direction dir = idsbench::eval::LowerIsBetter(*metric)
                                       ? idsbench::stats::Direction::kLowerBetter
                                       : idsbench::stats::Direction::kHigherBetter;
  if (direction == "higher") {
    dir = idsbench::stats::Direction::kHigherBetter;
  } else if (direction == "lower") {
    dir = idsbench::stats::Direction::kLowerBetter;
  } else if (!direction.empty()) {
    return Report(cli::ConfigError("--direction", "expected 'higher' or 'lower'"));
  }
  std::vector<double> alphas = {0.05, 0.1};
  if (!flags.alphas.empty()) {
    absl::StatusOr<std::vector<double>> parsed = cli::ParseAlphaList(flags.alphas);
    if (!parsed.ok()) return Report(cli::ConfigError("--alpha", parsed.status().message()));
    alphas = *parsed;
  }
  return Report(cli::RunStatsOnMatrix(input, idsbench::eval::MetricName(*metric), dir,
                                      alphas, flags.out));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"idsbench: intrusion detection classifier benchmark"};
  app.set_version_flag("--version", std::string(cli::kToolVersion));
  app.require_subcommand(1);

  struct Stage {
    const char* name;
    const char* help;
    absl::Status (*fn)(const cli::BenchmarkConfig&);
  };
  const Stage stages[] = {
      {"ingest", "Load, validate and sample the datasets", cli::RunIngest},
      {"train", "Tune and fit one model per dataset and classifier", cli::RunTrain},
      {"evaluate", "Validate every cell and write the results matrices",
       cli::RunEvaluate},
      {"report", "Assemble the summary and plot data", cli::RunReport},
      {"run", "All stages in one process", cli::RunBenchmark},
  };
  std::map<std::string, CommonFlags> flags;
  for (const Stage& s : stages) {
    AddCommonFlags(app.add_subcommand(s.name, s.help), &flags[s.name],
                   /*config_required=*/true);
  }
  CLI::App* stats = app.add_subcommand(
      "stats", "Friedman and Nemenyi tests on the results matrices");
  AddCommonFlags(stats, &flags["stats"], /*config_required=*/false);
  std::string input;
  std::string direction;
  stats->add_option("--input", input,
                    "Results matrix CSV (dataset,<classifier>...) instead of a config")
      ->check(CLI::ExistingFile);
  stats->add_option("--direction", direction,
                    "higher or lower is better; defaults by metric");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (stats->parsed()) {
    const CommonFlags& f = flags["stats"];
    if (!input.empty()) return RunMatrixStats(f, input, direction);
    if (f.config.empty()) {
      return Report(cli::ConfigError("stats", "either --config or --input is required"));
    }
    return RunStage(f, cli::RunStats);
  }
  for (const Stage& s : stages) {
    if (app.got_subcommand(s.name)) return RunStage(flags[s.name], s.fn);
  }
  return 1;
}
