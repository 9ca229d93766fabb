// Copyright 2026 The dpredescribe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpr/induction.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dpr/privacy.h"

namespace dpr {
namespace {

// Class-count vector with a running sum of squared counts.
struct ClassTally {
  explicit ClassTally(std::size_t classes) : counts(classes, 0) {}

  void Add(std::uint32_t c) {
    sumsq += 2 * counts[c] + 1;
    ++counts[c];
    ++size;
  }
  void Remove(std::uint32_t c) {
    sumsq -= 2 * counts[c] - 1;
    --counts[c];
    --size;
  }
  void Reset() {
    std::fill(counts.begin(), counts.end(), 0);
    size = 0;
    sumsq = 0;
  }
  double Impurity() const {
    if (size == 0) return 0.0;
    const double n = static_cast<double>(size);
    return n - static_cast<double>(sumsq) / n;
  }

  std::vector<std::uint64_t> counts;
  std::uint64_t size = 0;
  std::uint64_t sumsq = 0;
};

}  // namespace

SplitScorer::SplitScorer(const View& view,
                         std::span<const SplitPoint> candidates)
    : view_(view), candidates_(candidates) {
  sorted_.resize(view.attribute_count());
  for (std::size_t i = 0; i < candidates.size();) {
    std::size_t j = i;
    while (j < candidates.size() &&
           candidates[j].attribute == candidates[i].attribute) {
      ++j;
    }
    const std::size_t a = candidates[i].attribute;
    groups_.push_back({a, i, j});
    if (view.attribute(a).kind == AttributeKind::kNumeric &&
        sorted_[a].empty()) {
      const std::span<const double> column = view.column(a);
      for (std::size_t e = 0; e < column.size(); ++e) {
        if (!View::IsMissing(column[e])) {
          sorted_[a].push_back(static_cast<std::uint32_t>(e));
        }
      }
      std::stable_sort(sorted_[a].begin(), sorted_[a].end(),
                       [&](std::uint32_t x, std::uint32_t y) {
                         return column[x] < column[y];
                       });
    }
    i = j;
  }
}

std::vector<double> SplitScorer::Score(std::span<const std::uint32_t> entities,
                                       std::span<const std::uint32_t> labels,
                                       std::size_t class_count) const {
  std::vector<double> quality(candidates_.size(), 0.0);
  std::vector<std::uint8_t> member(view_.entity_count(), 0);
  for (std::uint32_t e : entities) member[e] = 1;
  ClassTally pass(class_count);
  ClassTally fail(class_count);
  for (const Group& group : groups_) {
    const std::span<const double> column = view_.column(group.attribute);
    const Attribute& attr = view_.attribute(group.attribute);
    pass.Reset();
    fail.Reset();
    switch (attr.kind) {
      case AttributeKind::kBoolean: {
        for (std::uint32_t e : entities) {
          const double v = column[e];
          if (View::IsMissing(v)) continue;
          (v != 0.0 ? pass : fail).Add(labels[e]);
        }
        const double q = -(pass.Impurity() + fail.Impurity());
        for (std::size_t s = group.begin; s < group.end; ++s) quality[s] = q;
        break;
      }
      case AttributeKind::kCategorical: {
        const std::size_t cats = attr.categories.size();
        std::vector<std::uint64_t> table(cats * class_count, 0);
        for (std::uint32_t e : entities) {
          const double v = column[e];
          if (View::IsMissing(v)) continue;
          ++table[static_cast<std::size_t>(v) * class_count + labels[e]];
          fail.Add(labels[e]);
        }
        for (std::size_t s = group.begin; s < group.end; ++s) {
          const std::size_t cat = candidates_[s].category;
          ClassTally in(0);
          ClassTally out(0);
          for (std::size_t c = 0; c < class_count; ++c) {
            const std::uint64_t k = table[cat * class_count + c];
            const std::uint64_t r = fail.counts[c] - k;
            in.size += k;
            in.sumsq += k * k;
            out.size += r;
            out.sumsq += r * r;
          }
          quality[s] = -(in.Impurity() + out.Impurity());
        }
        break;
      }
      case AttributeKind::kNumeric: {
        std::vector<std::uint32_t> order;
        order.reserve(entities.size());
        for (std::uint32_t e : sorted_[group.attribute]) {
          if (member[e]) {
            order.push_back(e);
            fail.Add(labels[e]);
          }
        }
        std::vector<std::size_t> by_threshold(group.end - group.begin);
        std::iota(by_threshold.begin(), by_threshold.end(), group.begin);
        std::stable_sort(by_threshold.begin(), by_threshold.end(),
                         [&](std::size_t x, std::size_t y) {
                           return candidates_[x].threshold <
                                  candidates_[y].threshold;
                         });
        std::size_t next = 0;
        for (std::size_t s : by_threshold) {
          const double threshold = candidates_[s].threshold;
          while (next < order.size() && column[order[next]] <= threshold) {
            pass.Add(labels[order[next]]);
            fail.Remove(labels[order[next]]);
            ++next;
          }
          quality[s] = -(pass.Impurity() + fail.Impurity());
        }
        break;
      }
    }
  }
  return quality;
}

DecisionTree BuildExpMechTree(const View& view, Side side,
                              std::span<const SplitPoint> candidates,
                              const TargetVariable& target, int depth,
                              double epsilon, RandomSource& rng) {
  if (depth < 1) throw std::invalid_argument("tree depth must be at least 1");
  if (candidates.empty()) throw std::invalid_argument("view has no splits");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const double level_epsilon = epsilon / depth;
  const SplitScorer scorer(view, candidates);
  std::vector<SplitPoint> splits((std::size_t{1} << depth) - 1);
  // Entities reaching each node of the current level, left to right.
  std::vector<std::vector<std::uint32_t>> level(1);
  level[0].resize(view.entity_count());
  std::iota(level[0].begin(), level[0].end(), 0u);
  std::size_t first = 0;
  for (int l = 0; l < depth; ++l) {
    std::vector<std::vector<std::uint32_t>> next(level.size() * 2);
    for (std::size_t j = 0; j < level.size(); ++j) {
      const std::vector<double> quality =
          scorer.Score(level[j], target.labels, target.class_count);
      const SplitPoint& split = candidates[ExpMechSelect(
          quality, level_epsilon, kGiniSensitivity, rng)];
      splits[first + j] = split;
      const std::span<const double> column = view.column(split.attribute);
      for (std::uint32_t e : level[j]) {
        switch (RouteValue(split, column[e])) {
          case Route::kPass:
            next[2 * j].push_back(e);
            break;
          case Route::kFail:
            next[2 * j + 1].push_back(e);
            break;
          case Route::kMissing:
            break;
        }
      }
    }
    first += level.size();
    level = std::move(next);
  }
  return DecisionTree(side, depth, std::move(splits));
}

TreeChain::TreeChain(const View& view, Side side,
                     std::span<const SplitPoint> candidates,
                     const TargetVariable& target, int depth,
                     RandomSource& rng)
    : candidates_(candidates),
      rng_(rng),
      state_(view, RandomSplitTree(side, depth, candidates, rng), target) {
  if (depth < 1) throw std::invalid_argument("tree depth must be at least 1");
}

void TreeChain::Step(double epsilon) {
  const double old_score = score();
  history_.push_back(old_score);
  const std::size_t node = rng_.UniformIndex(state_.tree().internal_count());
  const SplitPoint& split = candidates_[rng_.UniformIndex(candidates_.size())];
  state_.ReplaceNode(node, split, candidates_, rng_);
  if (MhAccept(old_score, score(), epsilon, kG1Sensitivity, rng_)) {
    ++accepted_;
  } else {
    state_.UndoReplace();
  }
}

DecisionTree SampleMcmcTree(const View& view, Side side,
                            std::span<const SplitPoint> candidates,
                            const TargetVariable& target, int depth,
                            const McmcOptions& options, RandomSource& rng) {
  TreeChain chain(view, side, candidates, target, depth, rng);
  for (std::size_t i = 0; i < options.max_iterations &&
                          !StabilizedVar(chain.history(), options.window,
                                         options.sigma);
       ++i) {
    chain.Step(options.epsilon);
  }
  return chain.state().tree();
}

}  // namespace dpr
