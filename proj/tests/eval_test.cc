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

#include "gtest/gtest.h"
#include "idsbench/data/loader.h"
#include "idsbench/data/sampling.h"
#include "idsbench/eval/classifier.h"
#include "idsbench/eval/report.h"
#include "idsbench/eval/search.h"
#include "idsbench/eval/timing.h"
#include "idsbench/eval/validation.h"
#include "test_util.h"

namespace idsbench::eval {
namespace {

using model::ModelKind;

constexpr ModelKind kAllKinds[] = {ModelKind::kCart,        ModelKind::kRandomForest,
                                   ModelKind::kExtraTrees,  ModelKind::kAdaBoost,
                                   ModelKind::kGbm,         ModelKind::kRegularizedGb,
                                   ModelKind::kMlp};

// Small, fast variant of each kind.
ClassifierSpec SmallSpec(ModelKind kind) {
  ClassifierSpec spec = ClassifierSpec::Default(kind);
  switch (kind) {
    case ModelKind::kRandomForest:
    case ModelKind::kExtraTrees:
    case ModelKind::kRegularizedGb:
      EXPECT_TRUE(spec.Set("n_estimators", "10").ok());
      break;
    case ModelKind::kGbm:
      EXPECT_TRUE(spec.Set("n_estimators", "20").ok());
      break;
    case ModelKind::kMlp:
      EXPECT_TRUE(spec.Set("hidden_size", "8").ok());
      EXPECT_TRUE(spec.Set("max_iter", "20").ok());
      EXPECT_TRUE(spec.Set("learning_rate", "0.05").ok());
      break;
    default:
      break;
  }
  return spec;
}

const data::Dataset& Fixture() {
  static const data::Dataset ds = [] {
    auto full = data::LoadDataset(testing::TestDataPath("synthetic_dos.csv"),
                                  *data::BuiltinSchema("CIDDS001"));
    return *data::SampleStratified(*full, 150, 100, 1);
  }();
  return ds;
}

// The report without its timing fields.
nlohmann::json WithoutTiming(const ValidationReport& r) {
  return ReportToJson(r, /*include_timing=*/false);
}

TEST(ClassifierSpecTest, DefaultsAndDeskScale) {
  const auto rf = std::get<ensemble::ForestParams>(
      ClassifierSpec::Default(ModelKind::kRandomForest).params);
  EXPECT_EQ(rf.n_estimators, 500);
  EXPECT_EQ(std::get<ensemble::ForestParams>(
                ClassifierSpec::DeskScale(ModelKind::kRandomForest).params)
                .n_estimators,
            100);
  EXPECT_EQ(std::get<ensemble::ForestParams>(
                ClassifierSpec::DeskScale(ModelKind::kExtraTrees).params)
                .n_estimators,
            200);
  const auto xgb = std::get<ensemble::RegularizedGbParams>(
      ClassifierSpec::Default(ModelKind::kRegularizedGb).params);
  EXPECT_EQ(xgb.max_depth, 8);
  EXPECT_EQ(xgb.subsample, 0.6);
  EXPECT_EQ(std::get<mlp::MlpParams>(ClassifierSpec::Default(ModelKind::kMlp).params)
                .hidden_size,
            100);
}

TEST(ClassifierSpecTest, SetIsStrict) {
  ClassifierSpec cart = ClassifierSpec::Default(ModelKind::kCart);
  EXPECT_TRUE(cart.Set("max_depth", "4").ok());
  EXPECT_FALSE(cart.Set("n_estimators", "4").ok());
  EXPECT_FALSE(cart.Set("max_depth", "four").ok());
  ClassifierSpec rf = ClassifierSpec::Default(ModelKind::kRandomForest);
  EXPECT_TRUE(rf.Set("feature_subset_size", "3").ok());
  EXPECT_TRUE(rf.Set("feature_subset_size", "auto").ok());
  EXPECT_FALSE(std::get<ensemble::ForestParams>(rf.params).feature_subset_size);
  EXPECT_TRUE(rf.Set("bootstrap", "false").ok());
}

TEST(ClassifierSpecTest, ParamsJsonRoundTrip) {
  for (const ModelKind kind : kAllKinds) {
    ClassifierSpec spec = SmallSpec(kind);
    ClassifierSpec back = ClassifierSpec::Default(kind);
    ASSERT_TRUE(back.ParamsFromJson(spec.ParamsToJson()).ok()) << spec.Name();
    EXPECT_EQ(back.ParamsToJson(), spec.ParamsToJson());
  }
}

TEST(ClassifierTest, TrainSaveLoadEveryKind) {
  const auto m = testing::MakeMatrix(200, 4, 3);
  const auto dir = testing::TempDir("models");
  for (const ModelKind kind : kAllKinds) {
    const ClassifierSpec spec = SmallSpec(kind);
    const auto model = TrainClassifier(spec, m, 5);
    ASSERT_TRUE(model.ok()) << spec.Name() << ": " << model.status();
    EXPECT_EQ((*model)->kind(), kind);
    const auto path = dir / (spec.Name() + ".json");
    ASSERT_TRUE(SaveModel(**model, path, &spec).ok());
    const auto back = LoadModel(path);
    ASSERT_TRUE(back.ok()) << back.status();
    for (size_t i = 0; i < 20; ++i) {
      EXPECT_EQ((*back)->PredictUnchecked(m.Row(i)).score,
                (*model)->PredictUnchecked(m.Row(i)).score);
    }
    EXPECT_FALSE((*model)->Predict(std::vector<double>{1.0}).ok());
  }
}

TEST(ValidationTest, SeedsFollowTheDocumentedDerivation) {
  data::SplitPlan plan;
  plan.seed = 99;
  EXPECT_EQ(SplitSeed(plan, 1, 2), utils::DeriveSeed(99, "holdout", {1, 2}));
  plan.kind = data::SplitPlan::Kind::kKFold;
  EXPECT_EQ(SplitSeed(plan, 1, 2), utils::DeriveSeed(99, "kfold", {1, 2}));
  EXPECT_EQ(FitSeed(99, 1, 2, 3), utils::DeriveSeed(99, "fit", {1, 2, 3}));
}

TEST(ValidationTest, HoldoutShapeAndDeterminism) {
  data::SplitPlan plan;
  plan.rounds = 3;
  plan.repeats = 2;
  plan.seed = 4;
  for (const ModelKind kind : kAllKinds) {
    const ClassifierSpec spec = SmallSpec(kind);
    const auto a = Validate(spec, Fixture(), plan, "fx", {.workers = 1});
    const auto b = Validate(spec, Fixture(), plan, "fx", {.workers = 1});
    const auto c = Validate(spec, Fixture(), plan, "fx", {.workers = 4});
    ASSERT_TRUE(a.ok() && b.ok() && c.ok()) << spec.Name();
    EXPECT_EQ(a->rounds.size(), 6u);
    EXPECT_EQ(a->repeat_means.size(), 2u);
    EXPECT_EQ(WithoutTiming(*a), WithoutTiming(*b)) << spec.Name();
    EXPECT_EQ(WithoutTiming(*a), WithoutTiming(*c)) << spec.Name();
    EXPECT_GT(*a->mean.accuracy, 0.5) << spec.Name();
    EXPECT_GT(a->mean.mbt_seconds, 0.0);
  }
}

TEST(ValidationTest, KFoldMeansOverFolds) {
  data::SplitPlan plan;
  plan.kind = data::SplitPlan::Kind::kKFold;
  plan.k = 5;
  plan.rounds = 1;
  plan.repeats = 1;
  plan.seed = 8;
  const ClassifierSpec spec = SmallSpec(ModelKind::kCart);
  const auto report = Validate(spec, Fixture(), plan, "fx");
  ASSERT_TRUE(report.ok());
  ASSERT_EQ(report->rounds.size(), 1u);
  const auto folds = data::KFoldPartitions(Fixture().num_rows(), 5, SplitSeed(plan, 0, 0));
  std::vector<MetricSet> per_fold;
  for (int f = 0; f < 5; ++f) {
    per_fold.push_back(*EvaluateSplit(spec, Fixture(), (*folds)[f], FitSeed(8, 0, 0, f)));
  }
  EXPECT_DOUBLE_EQ(*report->rounds[0].metrics.accuracy, *MeanMetricSet(per_fold).accuracy);
}

TEST(ValidationTest, SingleClassDatasetFails) {
  const data::Dataset& ds = Fixture();
  std::vector<size_t> normals;
  for (size_t i = 0; i < ds.num_rows(); ++i) {
    if (ds.label(i) == data::kNormal) normals.push_back(i);
  }
  data::SplitPlan plan;
  plan.rounds = 1;
  plan.repeats = 1;
  EXPECT_FALSE(Validate(SmallSpec(ModelKind::kCart), ds.Subset(normals), plan, "x").ok());
}

TEST(SearchTest, ParseDistributions) {
  const auto d = ParseParamDistribution("max_depth=int:2:30");
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(d->name, "max_depth");
  EXPECT_EQ(std::get<IntRange>(d->distribution).hi, 30);
  EXPECT_TRUE(std::get<RealRange>(ParseParamDistribution("learning_rate=logreal:0.001:1")
                                      ->distribution)
                  .log_scale);
  EXPECT_EQ(std::get<Choice>(ParseParamDistribution("bootstrap=choice:true|false")
                                 ->distribution)
                .values.size(),
            2u);
  EXPECT_FALSE(ParseParamDistribution("max_depth=int:5:2").ok());
  EXPECT_FALSE(ParseParamDistribution("max_depth").ok());
}

TEST(SearchTest, DrawsInRangeAndDeterministic) {
  const ParamSpace space = {*ParseParamDistribution("max_depth=int:2:5"),
                            *ParseParamDistribution("learning_rate=real:0.1:0.2")};
  const auto a = DrawParams(space, 20, 3);
  ASSERT_TRUE(a.ok());
  EXPECT_EQ(*a, *DrawParams(space, 20, 3));
  for (const ParamDraw& d : *a) {
    const int depth = std::stoi(d[0].second);
    EXPECT_GE(depth, 2);
    EXPECT_LE(depth, 5);
    const double lr = std::stod(d[1].second);
    EXPECT_GE(lr, 0.1);
    EXPECT_LT(lr, 0.2);
  }
  EXPECT_FALSE(DrawParams({}, 3, 1).ok());
}

TEST(SearchTest, PicksBestAndKeepsEarlierOnTies) {
  ClassifierSpec base = ClassifierSpec::Default(ModelKind::kCart);
  const ParamSpace space = {*ParseParamDistribution("max_depth=int:1:6")};
  const auto result = RandomSearch(base, space, 6, Fixture(), 3, 11);
  ASSERT_TRUE(result.ok()) << result.status();
  ASSERT_EQ(result->scores.size(), 6u);
  size_t best = 0;
  for (size_t i = 1; i < result->scores.size(); ++i) {
    if (result->scores[i] > result->scores[best]) best = i;
  }
  EXPECT_EQ(result->best_draw, result->draws[best]);
  EXPECT_EQ(result->best_score, result->scores[best]);
  EXPECT_EQ(std::get<tree::TreeParams>(result->best.params).max_depth,
            std::stoi(result->draws[best][0].second));
  ClassifierSpec bad = base;
  EXPECT_FALSE(RandomSearch(bad, {*ParseParamDistribution("hidden_size=int:1:2")}, 2,
                            Fixture(), 3, 1)
                   .ok());
}

TEST(ReportTest, CsvAndJsonRoundTrip) {
  data::SplitPlan plan;
  plan.rounds = 2;
  plan.repeats = 1;
  const auto report = Validate(SmallSpec(ModelKind::kCart), Fixture(), plan, "fx");
  ASSERT_TRUE(report.ok());
  const std::string csv = ReportToCsv(*report, true);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "dataset,classifier,round,repeat,accuracy,specificity,sensitivity,fpr,"
            "auc,mbt_s,resp_s");
  const std::string no_timing = ReportToCsv(*report, false);
  EXPECT_NE(no_timing.find(",,\n"), std::string::npos);
  const auto back = ReportFromJson(ReportToJson(*report, true));
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(ReportToCsv(*back, true), csv);
  EXPECT_EQ(FormatMetric(std::nullopt), "undefined");
  EXPECT_FALSE(ParseMetricValue("undefined")->has_value());
  EXPECT_EQ(**ParseMetricValue("0.25"), 0.25);
}

TEST(SplitPlanJsonTest, RoundTrip) {
  data::SplitPlan plan;
  plan.kind = data::SplitPlan::Kind::kKFold;
  plan.k = 7;
  plan.seed = 123456789012345ull;
  plan.stratified = true;
  const auto back = SplitPlanFromJson(SplitPlanToJson(plan));
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(SplitPlanToJson(*back), SplitPlanToJson(plan));
}

TEST(TimingTest, MedianAndPredictTimed) {
  EXPECT_EQ(Median({3, 1, 2}), 2.0);
  EXPECT_EQ(Median({4, 1, 2, 3}), 2.5);
  const auto m = testing::MakeMatrix(50, 3, 1);
  const auto model = TrainClassifier(SmallSpec(ModelKind::kCart), m, 1);
  const auto timed = PredictTimed(**model, m);
  ASSERT_TRUE(timed.ok());
  EXPECT_EQ(timed->predictions.size(), 50u);
  EXPECT_DOUBLE_EQ(timed->seconds_per_instance, timed->total_seconds / 50);
  data::FeatureMatrix empty;
  empty.num_features = 3;
  EXPECT_FALSE(PredictTimed(**model, empty).ok());
  EXPECT_GT(*MeasureMbt(SmallSpec(ModelKind::kCart), m, 1), 0.0);
}

}  // namespace
}  // namespace idsbench::eval
