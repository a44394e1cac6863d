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

#include "idsbench/eval/search.h"

#include <cmath>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "idsbench/data/sampling.h"
#include "idsbench/eval/validation.h"
#include "idsbench/utils/csv.h"
#include "idsbench/utils/random.h"
#include "idsbench/utils/status_macros.h"

namespace idsbench::eval {
namespace {

std::string Sample(const IntRange& d, utils::Rng& rng) {
  const uint64_t span = static_cast<uint64_t>(d.hi - d.lo) + 1;
  return absl::StrCat(d.lo + static_cast<int64_t>(utils::UniformIndex(rng, span)));
}

std::string Sample(const RealRange& d, utils::Rng& rng) {
  const double u = utils::UniformUnit(rng);
  const double v = d.log_scale
                       ? std::exp(std::log(d.lo) + u * (std::log(d.hi) - std::log(d.lo)))
                       : d.lo + u * (d.hi - d.lo);
  return utils::FormatDouble(v);
}

std::string Sample(const Choice& d, utils::Rng& rng) {
  return d.values[utils::UniformIndex(rng, d.values.size())];
}

absl::Status CheckDistribution(const ParamDistribution& p) {
  if (p.name.empty()) return absl::InvalidArgumentError("parameter without name");
  if (const auto* d = std::get_if<IntRange>(&p.distribution)) {
    if (d->lo > d->hi) {
      return absl::InvalidArgumentError(absl::StrCat("empty range for ", p.name));
    }
  } else if (const auto* d = std::get_if<RealRange>(&p.distribution)) {
    if (!(d->lo <= d->hi) || (d->log_scale && !(d->lo > 0.0))) {
      return absl::InvalidArgumentError(absl::StrCat("bad range for ", p.name));
    }
  } else if (std::get<Choice>(p.distribution).values.empty()) {
    return absl::InvalidArgumentError(absl::StrCat("no choices for ", p.name));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<ParamDistribution> ParseParamDistribution(absl::string_view text) {
  const std::pair<std::string, std::string> kv =
      absl::StrSplit(text, absl::MaxSplits('=', 1));
  const std::vector<std::string> parts = absl::StrSplit(kv.second, ':');
  auto bad = [&] {
    return absl::InvalidArgumentError(
        absl::StrCat("cannot parse parameter distribution '", text, "'"));
  };
  ParamDistribution p;
  p.name = std::string(absl::StripAsciiWhitespace(kv.first));
  if (parts.size() == 2 && parts[0] == "choice") {
    p.distribution = Choice{absl::StrSplit(parts[1], '|', absl::SkipEmpty())};
  } else if (parts.size() == 3 && parts[0] == "int") {
    IntRange r;
    if (!absl::SimpleAtoi(parts[1], &r.lo) || !absl::SimpleAtoi(parts[2], &r.hi)) {
      return bad();
    }
    p.distribution = r;
  } else if (parts.size() == 3 && (parts[0] == "real" || parts[0] == "logreal")) {
    RealRange r;
    r.log_scale = parts[0] == "logreal";
    if (!absl::SimpleAtod(parts[1], &r.lo) || !absl::SimpleAtod(parts[2], &r.hi)) {
      return bad();
    }
    p.distribution = r;
  } else {
    return bad();
  }
  RETURN_IF_ERROR(CheckDistribution(p));
  return p;
}

absl::StatusOr<std::vector<ParamDraw>> DrawParams(const ParamSpace& space,
                                                  int budget, uint64_t seed) {
  if (space.empty()) {
    return absl::InvalidArgumentError("EmptySpace: no parameters to search");
  }
  if (budget < 1) return absl::InvalidArgumentError("budget must be >= 1");
  for (const ParamDistribution& p : space) RETURN_IF_ERROR(CheckDistribution(p));
  utils::Rng rng(seed);
  std::vector<ParamDraw> draws(static_cast<size_t>(budget));
  for (ParamDraw& draw : draws) {
    for (const ParamDistribution& p : space) {
      draw.emplace_back(p.name, std::visit([&](const auto& d) { return Sample(d, rng); },
                                           p.distribution));
    }
  }
  return draws;
}

absl::StatusOr<double> KFoldAccuracy(const ClassifierSpec& spec,
                                     const data::Dataset& ds, int k,
                                     uint64_t seed) {
  ASSIGN_OR_RETURN(const std::vector<data::IndexSplit> folds,
                   data::KFoldPartitions(ds.num_rows(), k, seed));
  double sum = 0.0;
  for (size_t f = 0; f < folds.size(); ++f) {
    ASSIGN_OR_RETURN(
        const MetricSet m,
        EvaluateSplit(spec, ds, folds[f],
                      utils::DeriveSeed(seed, "fit", {static_cast<uint64_t>(f)})));
    sum += *m.accuracy;
  }
  return sum / static_cast<double>(folds.size());
}

absl::StatusOr<SearchResult> RandomSearch(const ClassifierSpec& base,
                                          const ParamSpace& space, int budget,
                                          const data::Dataset& ds, int k,
                                          uint64_t seed) {
  ASSIGN_OR_RETURN(std::vector<ParamDraw> draws,
                   DrawParams(space, budget, utils::DeriveSeed(seed, "draws")));
  const uint64_t fold_seed = utils::DeriveSeed(seed, "folds");
  SearchResult result;
  for (size_t i = 0; i < draws.size(); ++i) {
    ClassifierSpec spec = base;
    for (const auto& [name, value] : draws[i]) {
      RETURN_IF_ERROR(spec.Set(name, value));
    }
    ASSIGN_OR_RETURN(const double score, KFoldAccuracy(spec, ds, k, fold_seed));
    if (i == 0 || score > result.best_score) {
      result.best = spec;
      result.best_draw = draws[i];
      result.best_score = score;
    }
    result.scores.push_back(score);
  }
  result.draws = std::move(draws);
  return result;
}

}  // namespace idsbench::eval
