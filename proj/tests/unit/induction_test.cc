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

#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "doctest.h"
#include "dpr/induction.h"
#include "dpr/target.h"
#include "test_support.h"

namespace dpr {
namespace {

double Impurity(const std::vector<double>& counts) {
  double n = 0.0;
  double sq = 0.0;
  for (double c : counts) {
    n += c;
    sq += c * c;
  }
  return n > 0.0 ? n - sq / n : 0.0;
}

TEST_CASE("split scores match brute force") {
  RandomSource rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    testing::RandomDataSpec spec;
    spec.entities = 30 + rng.UniformIndex(50);
    spec.missing = 0.15;
    spec.max_levels = 6;
    const View view = testing::RandomView(rng, "a", spec);
    const std::vector<SplitPoint> splits =
        EnumerateSplitPoints(view, Side::kLeft);
    if (splits.empty()) continue;
    const std::size_t classes = 2 + rng.UniformIndex(3);
    std::vector<std::uint32_t> labels(view.entity_count());
    for (auto& l : labels) {
      l = static_cast<std::uint32_t>(rng.UniformIndex(classes));
    }
    std::vector<std::uint32_t> subset;
    for (std::uint32_t e = 0; e < view.entity_count(); ++e) {
      if (rng.Uniform() < 0.7) subset.push_back(e);
    }
    const SplitScorer scorer(view, splits);
    const std::vector<double> got = scorer.Score(subset, labels, classes);
    REQUIRE(got.size() == splits.size());
    for (std::size_t s = 0; s < splits.size(); ++s) {
      std::vector<double> pass(classes, 0.0);
      std::vector<double> fail(classes, 0.0);
      for (std::uint32_t e : subset) {
        const Route r = RouteEntity(view, splits[s], e);
        if (r == Route::kPass) pass[labels[e]] += 1;
        if (r == Route::kFail) fail[labels[e]] += 1;
      }
      REQUIRE(got[s] == doctest::Approx(-(Impurity(pass) + Impurity(fail))));
    }
  }
}

View TwoAttributeView() {
  // `good` determines the label, `noise` does not.
  std::vector<double> good;
  std::vector<double> noise;
  for (int i = 0; i < 40; ++i) {
    good.push_back(i % 2);
    noise.push_back((i / 2) % 2);
  }
  return View({{"noise", AttributeKind::kBoolean, {}},
               {"good", AttributeKind::kBoolean, {}}},
              {noise, good});
}

TEST_CASE("exponential mechanism tree with unlimited budget is greedy") {
  const View view = TwoAttributeView();
  const std::vector<SplitPoint> splits =
      EnumerateSplitPoints(view, Side::kLeft);
  const TargetVariable target = MakeInitialTarget(view, 1);
  RandomSource rng(1);
  const DecisionTree t = BuildExpMechTree(
      view, Side::kLeft, splits, target, 1,
      std::numeric_limits<double>::infinity(), rng);
  CHECK(t.split(0).attribute == 1);
}

TEST_CASE("fixed seed gives the same tree") {
  const View view = TwoAttributeView();
  const std::vector<SplitPoint> splits =
      EnumerateSplitPoints(view, Side::kLeft);
  const TargetVariable target = MakeInitialTarget(view, 1);
  RandomSource a(77, 3);
  RandomSource b(77, 3);
  CHECK(BuildExpMechTree(view, Side::kLeft, splits, target, 3, 0.5, a) ==
        BuildExpMechTree(view, Side::kLeft, splits, target, 3, 0.5, b));
  RandomSource c(77, 3);
  RandomSource d(77, 3);
  McmcOptions options;
  options.epsilon = 0.5;
  options.max_iterations = 300;
  CHECK(SampleMcmcTree(view, Side::kLeft, splits, target, 2, options, c) ==
        SampleMcmcTree(view, Side::kLeft, splits, target, 2, options, d));
}

TEST_CASE("vanishing budget selects uniformly") {
  std::vector<double> x;
  for (int i = 0; i < 12; ++i) x.push_back(i);
  const View view({{"x", AttributeKind::kNumeric, {}}}, {x});
  const std::vector<SplitPoint> splits =
      EnumerateSplitPoints(view, Side::kLeft);
  REQUIRE(splits.size() == 11);
  const TargetVariable target = MakeInitialTarget(view, 0);
  RandomSource rng(9);
  std::vector<double> freq(splits.size(), 0.0);
  const int runs = 10000;
  for (int r = 0; r < runs; ++r) {
    const DecisionTree t =
        BuildExpMechTree(view, Side::kLeft, splits, target, 1, 1e-12, rng);
    for (std::size_t s = 0; s < splits.size(); ++s) {
      if (t.split(0) == splits[s]) freq[s] += 1.0 / runs;
    }
  }
  double tv = 0.0;
  for (double f : freq) tv += 0.5 * std::abs(f - 1.0 / splits.size());
  CHECK(tv < 0.05);
}

TEST_CASE("mcmc chain keeps its history and stops early when flat") {
  const View view = TwoAttributeView();
  const std::vector<SplitPoint> splits =
      EnumerateSplitPoints(view, Side::kLeft);
  const TargetVariable target = MakeInitialTarget(view, 1);
  RandomSource rng(4);
  TreeChain chain(view, Side::kLeft, splits, target, 2, rng);
  for (int i = 0; i < 50; ++i) chain.Step(1.0);
  CHECK(chain.history().size() == 50);
  CHECK(chain.score() <= 0.0);
  CHECK(chain.score() >= -40.0);
}

TEST_CASE("mcmc with a large budget finds the informative split") {
  const View view = TwoAttributeView();
  const std::vector<SplitPoint> splits =
      EnumerateSplitPoints(view, Side::kLeft);
  const TargetVariable target = MakeInitialTarget(view, 1);
  RandomSource rng(12);
  McmcOptions options;
  options.epsilon = 50.0;
  options.max_iterations = 500;
  options.window = 100;
  options.sigma = 1e-9;
  const DecisionTree t =
      SampleMcmcTree(view, Side::kLeft, splits, target, 1, options, rng);
  CHECK(t.split(0).attribute == 1);
}

}  // namespace
}  // namespace dpr
