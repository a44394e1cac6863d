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

#include "idsbench/cli/config.h"

#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "idsbench/data/schema.h"
#include "idsbench/eval/report.h"
#include "idsbench/utils/csv.h"
#include "idsbench/utils/status_macros.h"

extern char** environ;

namespace idsbench::cli {
namespace {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

const std::set<std::string> kBenchmarkKeys = {
    "version", "master_seed", "output_dir", "workers", "profile",
    "metrics", "alphas",      "timing"};
const std::set<std::string> kValidationKeys = {
    "kind", "train_fraction", "k", "rounds", "repeats", "stratified"};
const std::set<std::string> kDatasetKeys = {"path", "schema", "sample_normal",
                                            "sample_attack"};

std::string Trim(absl::string_view s) {
  return std::string(absl::StripAsciiWhitespace(s));
}

// Applies IDSBENCH_<SECTION>_<KEY> overrides for the keys of `section`.
absl::Status ApplyEnv(const std::map<std::string, std::string>& env,
                      absl::string_view section,
                      const std::set<std::string>& keys, KeyValues* values) {
  const std::string prefix =
      absl::StrCat(kEnvPrefix, absl::AsciiStrToUpper(section), "_");
  for (const auto& [name, value] : env) {
    if (!absl::StartsWith(name, prefix)) continue;
    const std::string key = absl::AsciiStrToLower(name.substr(prefix.size()));
    if (!keys.contains(key)) {
      return ConfigError(name, "unknown configuration key in environment");
    }
    bool replaced = false;
    for (auto& [k, v] : *values) {
      if (k == key) {
        v = value;
        replaced = true;
      }
    }
    if (!replaced) values->emplace_back(key, value);
  }
  return absl::OkStatus();
}

template <typename T>
absl::Status ParseNumber(absl::string_view where, absl::string_view text, T* out) {
  bool ok;
  if constexpr (std::is_floating_point_v<T>) {
    ok = absl::SimpleAtod(text, out) && std::isfinite(*out);
  } else {
    ok = absl::SimpleAtoi(text, out);
  }
  if (!ok) return ConfigError(where, absl::StrCat("not a number: '", text, "'"));
  return absl::OkStatus();
}

absl::Status ParseBool(absl::string_view where, absl::string_view text, bool* out) {
  if (!absl::SimpleAtob(text, out)) {
    return ConfigError(where, absl::StrCat("not a boolean: '", text, "'"));
  }
  return absl::OkStatus();
}

absl::Status ParseBenchmark(const KeyValues& values,
                            const std::filesystem::path& base_dir,
                            BenchmarkConfig* config) {
  bool has_version = false;
  for (const auto& [key, value] : values) {
    const std::string where = absl::StrCat("[benchmark] ", key);
    if (key == "version") {
      int version;
      RETURN_IF_ERROR(ParseNumber(where, value, &version));
      if (version != kConfigVersion) {
        return ConfigError(where, absl::StrCat("unsupported version ", version));
      }
      has_version = true;
    } else if (key == "master_seed") {
      RETURN_IF_ERROR(ParseNumber(where, value, &config->master_seed));
    } else if (key == "output_dir") {
      config->output_dir = base_dir / value;
    } else if (key == "workers") {
      RETURN_IF_ERROR(ParseNumber(where, value, &config->workers));
    } else if (key == "profile") {
      if (value == "full") {
        config->profile = Profile::kFull;
      } else if (value == "desk") {
        config->profile = Profile::kDesk;
      } else {
        return ConfigError(where, "expected 'full' or 'desk'");
      }
    } else if (key == "metrics") {
      absl::StatusOr<std::vector<eval::Metric>> metrics = ParseMetricList(value);
      if (!metrics.ok()) return ConfigError(where, metrics.status().message());
      config->metrics = *std::move(metrics);
    } else if (key == "alphas") {
      absl::StatusOr<std::vector<double>> alphas = ParseAlphaList(value);
      if (!alphas.ok()) return ConfigError(where, alphas.status().message());
      config->alphas = *std::move(alphas);
    } else if (key == "timing") {
      RETURN_IF_ERROR(ParseBool(where, value, &config->timing));
    } else {
      return ConfigError(where, "unknown key");
    }
  }
  if (!has_version) {
    return ConfigError("[benchmark] version",
                       absl::StrCat("required; current version is ", kConfigVersion));
  }
  return absl::OkStatus();
}

absl::Status ParseValidation(const KeyValues& values, data::SplitPlan* plan) {
  for (const auto& [key, value] : values) {
    const std::string where = absl::StrCat("[validation] ", key);
    if (key == "kind") {
      if (value == "holdout") {
        plan->kind = data::SplitPlan::Kind::kHoldout;
      } else if (value == "kfold") {
        plan->kind = data::SplitPlan::Kind::kKFold;
      } else {
        return ConfigError(where, "expected 'holdout' or 'kfold'");
      }
    } else if (key == "train_fraction") {
      RETURN_IF_ERROR(ParseNumber(where, value, &plan->train_fraction));
    } else if (key == "k") {
      RETURN_IF_ERROR(ParseNumber(where, value, &plan->k));
    } else if (key == "rounds") {
      RETURN_IF_ERROR(ParseNumber(where, value, &plan->rounds));
    } else if (key == "repeats") {
      RETURN_IF_ERROR(ParseNumber(where, value, &plan->repeats));
    } else if (key == "stratified") {
      RETURN_IF_ERROR(ParseBool(where, value, &plan->stratified));
    } else {
      return ConfigError(where, "unknown key");
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<DatasetConfig> ParseDataset(const std::string& name,
                                           const KeyValues& values,
                                           const std::filesystem::path& base_dir) {
  DatasetConfig ds;
  ds.name = name;
  for (const auto& [key, value] : values) {
    const std::string where = absl::StrCat("[dataset.", name, "] ", key);
    if (key == "path") {
      ds.path = base_dir / value;
    } else if (key == "schema") {
      ds.schema = value;
    } else if (key == "sample_normal" || key == "sample_attack") {
      size_t n;
      RETURN_IF_ERROR(ParseNumber(where, value, &n));
      (key == "sample_normal" ? ds.sample_normal : ds.sample_attack) = n;
    } else {
      return ConfigError(where, "unknown key");
    }
  }
  const std::string where = absl::StrCat("[dataset.", name, "]");
  if (ds.path.empty()) return ConfigError(where, "missing 'path'");
  if (ds.schema.empty()) return ConfigError(where, "missing 'schema'");
  if (ds.sample_normal.has_value() != ds.sample_attack.has_value()) {
    return ConfigError(where, "sample_normal and sample_attack go together");
  }
  if (!data::BuiltinSchema(ds.schema).ok()) {
    // Not a built-in name: a descriptor file relative to the config.
    ds.schema = (base_dir / ds.schema).string();
  }
  return ds;
}

absl::StatusOr<ClassifierConfig> ParseClassifier(const std::string& name,
                                                 const KeyValues& values,
                                                 Profile profile) {
  const std::string section = absl::StrCat("[classifier.", name, "]");
  std::string kind_name = name;
  for (const auto& [key, value] : values) {
    if (key == "kind") kind_name = value;
  }
  absl::StatusOr<model::ModelKind> kind = model::ParseModelKind(kind_name);
  if (!kind.ok()) return ConfigError(section, kind.status().message());
  ClassifierConfig c;
  c.name = name;
  c.spec = profile == Profile::kDesk ? eval::ClassifierSpec::DeskScale(*kind)
                                     : eval::ClassifierSpec::Default(*kind);
  SearchConfig search;
  bool has_search = false;
  for (const auto& [key, value] : values) {
    const std::string where = absl::StrCat(section, " ", key);
    if (key == "kind") continue;
    if (absl::StartsWith(key, "search.")) {
      absl::StatusOr<eval::ParamDistribution> dist =
          eval::ParseParamDistribution(absl::StrCat(key.substr(7), "=", value));
      if (!dist.ok()) return ConfigError(where, dist.status().message());
      // Rejects names the kind does not have.
      eval::ClassifierSpec probe = c.spec;
      if (absl::Status s = probe.Set(dist->name, "1"); absl::StrContains(
              s.message(), "unknown parameter")) {
        return ConfigError(where, s.message());
      }
      search.space.push_back(*std::move(dist));
      has_search = true;
    } else if (key == "search_budget") {
      RETURN_IF_ERROR(ParseNumber(where, value, &search.budget));
    } else if (key == "search_k") {
      RETURN_IF_ERROR(ParseNumber(where, value, &search.k));
    } else if (absl::Status s = c.spec.Set(key, value); !s.ok()) {
      return ConfigError(where, s.message());
    }
  }
  if (has_search) {
    if (search.budget < 1 || search.k < 2) {
      return ConfigError(section, "search_budget must be >= 1 and search_k >= 2");
    }
    c.search = std::move(search);
  }
  return c;
}

}  // namespace

absl::Status ConfigError(absl::string_view where, absl::string_view reason) {
  return absl::InvalidArgumentError(
      absl::StrCat("ConfigInvalid: ", where, ": ", reason));
}

std::map<std::string, std::string> EnvironmentOverrides() {
  std::map<std::string, std::string> env;
  for (char** e = environ; e && *e; ++e) {
    const absl::string_view entry(*e);
    if (!absl::StartsWith(entry, kEnvPrefix)) continue;
    const size_t eq = entry.find('=');
    if (eq == absl::string_view::npos) continue;
    env[std::string(entry.substr(0, eq))] = std::string(entry.substr(eq + 1));
  }
  return env;
}

absl::StatusOr<std::vector<eval::Metric>> ParseMetricList(absl::string_view text) {
  std::vector<eval::Metric> metrics;
  for (absl::string_view part : absl::StrSplit(text, ',', absl::SkipWhitespace())) {
    ASSIGN_OR_RETURN(const eval::Metric m, eval::ParseMetric(part));
    if (std::find(metrics.begin(), metrics.end(), m) != metrics.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("metric listed twice: ", part));
    }
    metrics.push_back(m);
  }
  if (metrics.empty()) return absl::InvalidArgumentError("empty metric list");
  return metrics;
}

absl::StatusOr<std::vector<double>> ParseAlphaList(absl::string_view text) {
  std::vector<double> alphas;
  for (absl::string_view part : absl::StrSplit(text, ',', absl::SkipWhitespace())) {
    double a;
    if (!absl::SimpleAtod(absl::StripAsciiWhitespace(part), &a) || !(a > 0.0) ||
        !(a < 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("alpha must be in (0, 1): '", part, "'"));
    }
    alphas.push_back(a);
  }
  if (alphas.empty()) return absl::InvalidArgumentError("empty alpha list");
  return alphas;
}

absl::Status BenchmarkConfig::Validate(bool check_paths) const {
  if (datasets.empty()) return ConfigError("config", "no [dataset.*] section");
  if (classifiers.empty()) return ConfigError("config", "no [classifier.*] section");
  if (workers < 1) return ConfigError("[benchmark] workers", "must be >= 1");
  if (absl::Status s = validation.Validate(); !s.ok()) {
    return ConfigError("[validation]", s.message());
  }
  std::set<std::string> names;
  for (const DatasetConfig& ds : datasets) {
    if (!names.insert(ds.name).second) {
      return ConfigError(ds.name, "duplicate dataset name");
    }
    if (check_paths && !std::filesystem::exists(ds.path)) {
      return ConfigError(absl::StrCat("[dataset.", ds.name, "] path"),
                         absl::StrCat("file not found: ", ds.path.string()));
    }
  }
  names.clear();
  for (const ClassifierConfig& c : classifiers) {
    if (!names.insert(c.name).second) {
      return ConfigError(c.name, "duplicate classifier name");
    }
  }
  return absl::OkStatus();
}

namespace {

// Section names in file order. The ptree reader drops sections without
// keys, but "[classifier.CART]" alone is a complete classifier entry.
std::vector<std::string> SectionNames(absl::string_view text) {
  std::vector<std::string> names;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    line = absl::StripAsciiWhitespace(line);
    if (line.size() > 2 && line.front() == '[' && line.back() == ']') {
      names.push_back(Trim(line.substr(1, line.size() - 2)));
    }
  }
  return names;
}

// Removes trailing "; comment" parts, which the INI reader keeps as part of
// the value. A ';' only starts a comment after whitespace.
std::string StripInlineComments(absl::string_view text) {
  std::string out;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    for (size_t i = 1; i < line.size(); ++i) {
      if (line[i] == ';' && absl::ascii_isspace(static_cast<unsigned char>(line[i - 1]))) {
        line = absl::StripTrailingAsciiWhitespace(line.substr(0, i));
        break;
      }
    }
    absl::StrAppend(&out, line, "\n");
  }
  return out;
}

}  // namespace

absl::StatusOr<BenchmarkConfig> ParseConfig(
    absl::string_view raw_text, const std::filesystem::path& base_dir,
    const std::map<std::string, std::string>& env) {
  const std::string text = StripInlineComments(raw_text);
  boost::property_tree::ptree parsed;
  try {
    std::istringstream in{std::string(text)};
    boost::property_tree::ini_parser::read_ini(in, parsed);
  } catch (const boost::property_tree::ini_parser_error& e) {
    return ConfigError(absl::StrCat("line ", e.line()), e.message());
  }
  boost::property_tree::ptree tree;
  for (const auto& [name, child] : parsed) {
    if (!child.data().empty()) tree.push_back({name, child});
  }
  for (const std::string& name : SectionNames(text)) {
    const auto it = parsed.find(name);
    tree.push_back({name, it == parsed.not_found()
                              ? boost::property_tree::ptree()
                              : it->second});
  }
  auto section_values = [](const boost::property_tree::ptree& section) {
    KeyValues values;
    for (const auto& [key, child] : section) {
      values.emplace_back(absl::AsciiStrToLower(Trim(key)), Trim(child.data()));
    }
    return values;
  };

  BenchmarkConfig config;
  KeyValues benchmark, validation;
  for (const auto& [name, section] : tree) {
    if (!section.data().empty()) {
      return ConfigError(name, "key outside of any section");
    }
    if (name == "benchmark") benchmark = section_values(section);
    if (name == "validation") validation = section_values(section);
  }
  RETURN_IF_ERROR(ApplyEnv(env, "benchmark", kBenchmarkKeys, &benchmark));
  RETURN_IF_ERROR(ApplyEnv(env, "validation", kValidationKeys, &validation));
  RETURN_IF_ERROR(ParseBenchmark(benchmark, base_dir, &config));
  RETURN_IF_ERROR(ParseValidation(validation, &config.validation));

  for (const auto& [name, section] : tree) {
    if (name == "benchmark" || name == "validation") continue;
    if (absl::StartsWith(name, "dataset.") && name.size() > 8) {
      ASSIGN_OR_RETURN(DatasetConfig ds,
                       ParseDataset(name.substr(8), section_values(section), base_dir));
      config.datasets.push_back(std::move(ds));
    } else if (absl::StartsWith(name, "classifier.") && name.size() > 11) {
      ASSIGN_OR_RETURN(ClassifierConfig c,
                       ParseClassifier(name.substr(11), section_values(section),
                                       config.profile));
      config.classifiers.push_back(std::move(c));
    } else {
      return ConfigError(absl::StrCat("[", name, "]"), "unknown section");
    }
  }
  RETURN_IF_ERROR(config.Validate(/*check_paths=*/false));
  return config;
}

absl::StatusOr<BenchmarkConfig> LoadConfig(
    const std::filesystem::path& path,
    const std::map<std::string, std::string>& env) {
  absl::StatusOr<std::string> text = utils::ReadFile(path);
  if (!text.ok()) return ConfigError(path.string(), text.status().message());
  return ParseConfig(*text, path.parent_path(), env);
}

nlohmann::json ConfigToJson(const BenchmarkConfig& config) {
  std::vector<std::string> metrics;
  for (const eval::Metric m : config.metrics) {
    metrics.emplace_back(eval::MetricName(m));
  }
  nlohmann::json datasets = nlohmann::json::array();
  for (const DatasetConfig& ds : config.datasets) {
    nlohmann::json j = {{"name", ds.name},
                        {"path", ds.path.string()},
                        {"schema", ds.schema}};
    if (ds.sample_normal) {
      j["sample_normal"] = *ds.sample_normal;
      j["sample_attack"] = *ds.sample_attack;
    }
    datasets.push_back(std::move(j));
  }
  nlohmann::json classifiers = nlohmann::json::array();
  for (const ClassifierConfig& c : config.classifiers) {
    nlohmann::json j = {{"name", c.name},
                        {"kind", model::ModelKindName(c.spec.kind)},
                        {"params", c.spec.ParamsToJson()}};
    if (c.search) {
      nlohmann::json space = nlohmann::json::object();
      for (const eval::ParamDistribution& p : c.search->space) {
        if (const auto* r = std::get_if<eval::IntRange>(&p.distribution)) {
          space[p.name] = absl::StrCat("int:", r->lo, ":", r->hi);
        } else if (const auto* r = std::get_if<eval::RealRange>(&p.distribution)) {
          space[p.name] = absl::StrCat(r->log_scale ? "logreal:" : "real:",
                                       utils::FormatDouble(r->lo), ":",
                                       utils::FormatDouble(r->hi));
        } else {
          space[p.name] = absl::StrCat(
              "choice:",
              absl::StrJoin(std::get<eval::Choice>(p.distribution).values, "|"));
        }
      }
      j["search"] = {{"space", std::move(space)},
                     {"budget", c.search->budget},
                     {"k", c.search->k}};
    }
    classifiers.push_back(std::move(j));
  }
  return {{"version", kConfigVersion},
          {"master_seed", config.master_seed},
          {"output_dir", config.output_dir.string()},
          {"profile", config.profile == Profile::kDesk ? "desk" : "full"},
          {"metrics", metrics},
          {"alphas", config.alphas},
          {"timing", config.timing},
          {"validation", eval::SplitPlanToJson(config.validation)},
          {"datasets", std::move(datasets)},
          {"classifiers", std::move(classifiers)}};
}

}  // namespace idsbench::cli
