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

#include "idsbench/tree/cart.h"

#include <algorithm>
#include <numeric>

#include "absl/strings/str_cat.h"

namespace idsbench::tree {
namespace {

// Gini and squared-error gains below this fraction of the node's scale are
// rounding noise.
constexpr double kRelativeMinGain = 1e-12;

// Additive node statistics. Meaning per task:
//   kClassifyGini: a = normal weight, b = attack weight.
//   kRegressMse:   a = weight, b = sum w*y, c = sum w*y^2.
//   kSecondOrder:  a = sum h, b = sum g.
struct Stats {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  int64_t count = 0;

  void Add(const Stats& o) {
    a += o.a;
    b += o.b;
    c += o.c;
    count += o.count;
  }
  Stats Minus(const Stats& o) const {
    return {a - o.a, b - o.b, c - o.c, count - o.count};
  }
};

class Grower {
 public:
  Grower(const TrainingData& data, const RowTargets& targets,
         const TreeParams& params, utils::Rng& rng)
      : data_(data), params_(params), rng_(rng) {
    const size_t n = data.num_rows();
    row_stats_.resize(n);
    for (size_t r = 0; r < n; ++r) {
      const uint32_t m = targets.multiplicity.empty() ? 1 : targets.multiplicity[r];
      if (m == 0) continue;
      active_.push_back(static_cast<uint32_t>(r));
      const double w = (targets.weights.empty() ? 1.0 : targets.weights[r]) * m;
      Stats& s = row_stats_[r];
      s.count = m;
      switch (params.task) {
        case TreeTask::kClassifyGini:
          (data.labels()[r] == data::kAttack ? s.b : s.a) = w;
          break;
        case TreeTask::kRegressMse:
          s.a = w;
          s.b = w * targets.targets[r];
          s.c = w * targets.targets[r] * targets.targets[r];
          break;
        case TreeTask::kSecondOrder:
          s.a = targets.hessians[r] * m;
          s.b = targets.gradients[r] * m;
          break;
      }
    }
    num_active_ = active_.size();
    const size_t q = data.num_features();
    if (params.split_mode == SplitMode::kBest) {
      std::vector<bool> is_active(n, false);
      for (const uint32_t r : active_) is_active[r] = true;
      orders_.reserve(q * num_active_);
      for (size_t f = 0; f < q; ++f) {
        for (const uint32_t r : data.sorted_rows(f)) {
          if (is_active[r]) orders_.push_back(r);
        }
      }
    }
    go_left_.resize(n);
    buffer_.resize(num_active_);
    subset_size_ = std::min<size_t>(
        q, params.feature_subset_size ? *params.feature_subset_size : q);
    feature_pool_.resize(q);
    std::iota(feature_pool_.begin(), feature_pool_.end(), 0);
  }

  size_t num_active() const { return num_active_; }

  GrownTree Grow() {
    GrownTree result;
    result.leaf_of_row.assign(data_.num_rows(), -1);
    leaf_of_row_ = &result.leaf_of_row;
    Build(0, num_active_, 0);
    result.tree = DecisionTree(std::move(nodes_), data_.num_features());
    return result;
  }

  std::optional<SplitRule> RootSplit() {
    const Stats total = SegmentStats(0, num_active_);
    if (!CanSplit(total, 0)) return std::nullopt;
    return FindSplit(0, num_active_, total);
  }

 private:
  // Row ids of a node; in kBest mode, ordered by feature f.
  uint32_t* Segment(size_t f) {
    return params_.split_mode == SplitMode::kBest
               ? orders_.data() + f * num_active_
               : active_.data();
  }

  Stats SegmentStats(size_t begin, size_t end) {
    Stats s;
    const uint32_t* rows = Segment(0);
    for (size_t i = begin; i < end; ++i) s.Add(row_stats_[rows[i]]);
    return s;
  }

  double Score(const Stats& s) const {
    switch (params_.task) {
      case TreeTask::kClassifyGini: {
        const double w = s.a + s.b;
        return w > 0.0 ? (s.a * s.a + s.b * s.b) / w : 0.0;
      }
      case TreeTask::kRegressMse:
        return s.a > 0.0 ? s.b * s.b / s.a : 0.0;
      case TreeTask::kSecondOrder:
        return s.b * s.b / (s.a + params_.lambda);
    }
    return 0.0;
  }

  double Gain(const Stats& left, const Stats& right, const Stats& parent) const {
    const double delta = Score(left) + Score(right) - Score(parent);
    switch (params_.task) {
      case TreeTask::kClassifyGini:
        return delta / (parent.a + parent.b);
      case TreeTask::kRegressMse:
        return delta / parent.a;
      case TreeTask::kSecondOrder:
        return 0.5 * delta - params_.gamma;
    }
    return 0.0;
  }

  double MinGain(const Stats& parent) const {
    switch (params_.task) {
      case TreeTask::kClassifyGini:
        return kRelativeMinGain;
      case TreeTask::kRegressMse:
        return kRelativeMinGain * parent.c / parent.a;
      case TreeTask::kSecondOrder:
        return 0.0;
    }
    return 0.0;
  }

  bool ValidChild(const Stats& s) const {
    if (s.count < params_.min_leaf_size) return false;
    if (params_.task == TreeTask::kSecondOrder && s.a < params_.min_child_weight) {
      return false;
    }
    return true;
  }

  bool CanSplit(const Stats& s, int depth) const {
    if (depth >= params_.max_depth) return false;
    if (s.count < params_.min_split_size || s.count < 2 * params_.min_leaf_size) {
      return false;
    }
    if (params_.task == TreeTask::kClassifyGini && (s.a <= 0.0 || s.b <= 0.0)) {
      return false;
    }
    return true;
  }

  void NodeRange(size_t f, size_t begin, size_t end, double* lo, double* hi) {
    const uint32_t* rows = Segment(f);
    if (params_.split_mode == SplitMode::kBest) {
      *lo = data_.value(rows[begin], f);
      *hi = data_.value(rows[end - 1], f);
      return;
    }
    *lo = *hi = data_.value(rows[begin], f);
    for (size_t i = begin + 1; i < end; ++i) {
      const double v = data_.value(rows[i], f);
      *lo = std::min(*lo, v);
      *hi = std::max(*hi, v);
    }
  }

  std::optional<SplitRule> FindSplit(size_t begin, size_t end,
                                     const Stats& total) {
    const size_t q = data_.num_features();
    std::vector<size_t> candidates;
    if (subset_size_ >= q) {
      for (size_t f = 0; f < q; ++f) candidates.push_back(f);
    } else {
      utils::Shuffle(std::span<size_t>(feature_pool_), rng_);
      for (const size_t f : feature_pool_) {
        double lo, hi;
        NodeRange(f, begin, end, &lo, &hi);
        if (lo < hi) candidates.push_back(f);
        if (candidates.size() == subset_size_) break;
      }
      std::sort(candidates.begin(), candidates.end());
    }

    std::optional<SplitRule> best;
    const double min_gain = MinGain(total);
    for (const size_t f : candidates) {
      double lo, hi;
      NodeRange(f, begin, end, &lo, &hi);
      if (!(lo < hi)) continue;
      std::optional<SplitRule> split =
          params_.split_mode == SplitMode::kBest
              ? BestThreshold(f, begin, end, total)
              : RandomThreshold(f, begin, end, total, lo, hi);
      if (split && split->gain > min_gain && (!best || split->gain > best->gain)) {
        best = split;
      }
    }
    return best;
  }

  std::optional<SplitRule> BestThreshold(size_t f, size_t begin, size_t end,
                                         const Stats& total) {
    const uint32_t* rows = Segment(f);
    std::optional<SplitRule> best;
    Stats left;
    for (size_t i = begin; i + 1 < end; ++i) {
      left.Add(row_stats_[rows[i]]);
      const double v = data_.value(rows[i], f);
      const double next = data_.value(rows[i + 1], f);
      if (!(v < next)) continue;
      const Stats right = total.Minus(left);
      if (!ValidChild(left) || !ValidChild(right)) continue;
      const double gain = Gain(left, right, total);
      if (!best || gain > best->gain) {
        double threshold = v + (next - v) / 2.0;
        if (!(threshold < next)) threshold = v;
        best = SplitRule{static_cast<int>(f), threshold, gain};
      }
    }
    return best;
  }

  std::optional<SplitRule> RandomThreshold(size_t f, size_t begin, size_t end,
                                           const Stats& total, double lo,
                                           double hi) {
    double threshold = lo + (hi - lo) * utils::UniformUnit(rng_);
    if (!(threshold < hi)) threshold = lo;
    const uint32_t* rows = Segment(f);
    Stats left;
    for (size_t i = begin; i < end; ++i) {
      if (data_.value(rows[i], f) <= threshold) left.Add(row_stats_[rows[i]]);
    }
    const Stats right = total.Minus(left);
    if (!ValidChild(left) || !ValidChild(right)) return std::nullopt;
    return SplitRule{static_cast<int>(f), threshold, Gain(left, right, total)};
  }

  // Stable partition of every ordered segment into left then right rows.
  size_t Partition(size_t begin, size_t end, const SplitRule& split) {
    const uint32_t* rows = Segment(0);
    size_t n_left = 0;
    for (size_t i = begin; i < end; ++i) {
      const bool left = data_.value(rows[i], split.feature) <= split.threshold;
      go_left_[rows[i]] = left;
      n_left += left;
    }
    const size_t num_segments =
        params_.split_mode == SplitMode::kBest ? data_.num_features() : 1;
    for (size_t f = 0; f < num_segments; ++f) {
      uint32_t* seg = Segment(f);
      size_t l = begin;
      size_t r = 0;
      for (size_t i = begin; i < end; ++i) {
        if (go_left_[seg[i]]) {
          seg[l++] = seg[i];
        } else {
          buffer_[r++] = seg[i];
        }
      }
      std::copy(buffer_.begin(), buffer_.begin() + r, seg + l);
    }
    return begin + n_left;
  }

  double LeafValue(const Stats& s) const {
    switch (params_.task) {
      case TreeTask::kClassifyGini:
        return s.b / (s.a + s.b);
      case TreeTask::kRegressMse:
        return s.a > 0.0 ? s.b / s.a : 0.0;
      case TreeTask::kSecondOrder:
        return -s.b / (s.a + params_.lambda);
    }
    return 0.0;
  }

  void Build(size_t begin, size_t end, int depth) {
    const int index = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    const Stats total = SegmentStats(begin, end);
    {
      TreeNode& node = nodes_.back();
      node.depth = depth;
      node.num_rows = total.count;
      if (params_.task == TreeTask::kClassifyGini) {
        node.weight_normal = total.a;
        node.weight_attack = total.b;
      } else {
        node.weight_normal = total.a;
      }
      node.value = end > begin ? LeafValue(total) : 0.0;
    }
    std::optional<SplitRule> split;
    if (end > begin && CanSplit(total, depth)) split = FindSplit(begin, end, total);
    if (!split) {
      const uint32_t* rows = Segment(0);
      for (size_t i = begin; i < end; ++i) (*leaf_of_row_)[rows[i]] = index;
      return;
    }
    const size_t mid = Partition(begin, end, *split);
    nodes_[index].feature = split->feature;
    nodes_[index].threshold = split->threshold;
    nodes_[index].gain = split->gain;
    nodes_[index].left = static_cast<int>(nodes_.size());
    Build(begin, mid, depth + 1);
    nodes_[index].right = static_cast<int>(nodes_.size());
    Build(mid, end, depth + 1);
  }

  const TrainingData& data_;
  const TreeParams& params_;
  utils::Rng& rng_;
  std::vector<Stats> row_stats_;
  std::vector<uint32_t> active_;
  size_t num_active_ = 0;
  // kBest: per feature, the active rows sorted by that feature.
  std::vector<uint32_t> orders_;
  std::vector<uint8_t> go_left_;
  std::vector<uint32_t> buffer_;
  size_t subset_size_ = 0;
  std::vector<size_t> feature_pool_;
  std::vector<TreeNode> nodes_;
  std::vector<int>* leaf_of_row_ = nullptr;
};

absl::Status CheckTargets(const TrainingData& data, const RowTargets& targets,
                          const TreeParams& params) {
  if (auto status = params.Validate(); !status.ok()) return status;
  const size_t n = data.num_rows();
  auto check = [n]<typename T>(const std::vector<T>& v, bool required,
                               absl::string_view name) -> absl::Status {
    if ((required || !v.empty()) && v.size() != n) {
      return absl::InvalidArgumentError(
          absl::StrCat(name, " has ", v.size(), " entries for ", n, " rows"));
    }
    return absl::OkStatus();
  };
  if (auto s = check(targets.multiplicity, false, "multiplicity"); !s.ok()) return s;
  if (auto s = check(targets.weights, false, "weights"); !s.ok()) return s;
  const bool mse = params.task == TreeTask::kRegressMse;
  const bool second = params.task == TreeTask::kSecondOrder;
  if (auto s = check(targets.targets, mse, "targets"); !s.ok()) return s;
  if (auto s = check(targets.gradients, second, "gradients"); !s.ok()) return s;
  if (auto s = check(targets.hessians, second, "hessians"); !s.ok()) return s;
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<GrownTree> GrowTree(const TrainingData& data,
                                   const RowTargets& targets,
                                   const TreeParams& params, utils::Rng& rng) {
  if (auto status = CheckTargets(data, targets, params); !status.ok()) {
    return status;
  }
  Grower grower(data, targets, params, rng);
  if (grower.num_active() == 0) {
    return absl::InvalidArgumentError("EmptyTrainingSet: no training rows");
  }
  return grower.Grow();
}

absl::StatusOr<std::optional<SplitRule>> FindBestSplit(
    const TrainingData& data, const RowTargets& targets,
    const TreeParams& params, utils::Rng& rng) {
  if (auto status = CheckTargets(data, targets, params); !status.ok()) {
    return status;
  }
  Grower grower(data, targets, params, rng);
  if (grower.num_active() == 0) return std::optional<SplitRule>();
  return grower.RootSplit();
}

model::Prediction CartModel::PredictUnchecked(std::span<const double> x) const {
  const TreeNode& leaf = tree_.Leaf(x);
  return {static_cast<data::BinaryLabel>(leaf.weight_attack > leaf.weight_normal),
          leaf.value};
}

nlohmann::json CartModel::ToJson() const { return {{"tree", tree_.ToJson()}}; }

absl::StatusOr<std::unique_ptr<CartModel>> CartModel::FromJson(
    const nlohmann::json& json, size_t num_features) {
  if (!json.contains("tree")) return absl::InvalidArgumentError("missing tree");
  auto tree = DecisionTree::FromJson(json["tree"], num_features);
  if (!tree.ok()) return tree.status();
  return std::make_unique<CartModel>(*std::move(tree));
}

TreeParams DefaultCartParams() {
  TreeParams params;
  params.max_depth = 10;
  params.min_leaf_size = 2;
  params.min_split_size = 2;
  return params;
}

absl::StatusOr<std::unique_ptr<CartModel>> FitCart(
    const data::FeatureMatrix& train, const TreeParams& params, uint64_t seed) {
  if (train.num_rows == 0) {
    return absl::InvalidArgumentError("EmptyTrainingSet: no training rows");
  }
  if (params.task != TreeTask::kClassifyGini) {
    return absl::InvalidArgumentError("CART classifier needs the Gini task");
  }
  const TrainingData data(train);
  utils::Rng rng(seed);
  auto grown = GrowTree(data, RowTargets(), params, rng);
  if (!grown.ok()) return grown.status();
  return std::make_unique<CartModel>(std::move(grown->tree));
}

}  // namespace idsbench::tree
