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

#include <map>

#include "doctest.h"
#include "dpr/curator.h"
#include "dpr/error.h"
#include "test_support.h"

namespace dpr {
namespace {

Dataset SmallData(std::uint64_t seed) {
  RandomSource rng(seed);
  testing::RandomDataSpec spec;
  spec.entities = 80;
  return testing::RandomDataset(rng, spec);
}

TEST_CASE("expmech tree charges one level at a time") {
  const Dataset data = SmallData(1);
  Curator curator(data, 1.0, 7);
  const TargetHandle target = curator.InitialTarget({Side::kRight, 0});
  const DecisionTree tree =
      curator.BuildTreeExpMech(Side::kLeft, target, 3, 0.3);
  CHECK(tree.side() == Side::kLeft);
  const auto& ledger = curator.accountant().ledger();
  REQUIRE(ledger.size() == 3);
  for (std::size_t l = 0; l < 3; ++l) {
    CHECK(ledger[l].epsilon == doctest::Approx(0.1));
    CHECK(ledger[l].partitions == (std::size_t{1} << l));
  }
  CHECK(curator.accountant().spent() == doctest::Approx(0.3));
}

TEST_CASE("requests beyond the budget are refused before any charge") {
  const Dataset data = SmallData(2);
  Curator curator(data, 1.0, 7);
  const TargetHandle target = curator.InitialTarget({Side::kLeft, 0});
  McmcOptions options;
  options.epsilon = 0.6;
  options.max_iterations = 50;
  curator.BuildTreeMcmc(Side::kRight, target, 2, options);
  CHECK_THROWS_AS(curator.BuildTreeMcmc(Side::kRight, target, 2, options),
                  BudgetExceededError);
  CHECK_THROWS_AS(curator.BuildTreeExpMech(Side::kRight, target, 2, 0.6),
                  BudgetExceededError);
  CHECK(curator.accountant().ledger().size() == 1);
  CHECK(curator.accountant().spent() == doctest::Approx(0.6));
}

TEST_CASE("leaf tables charge two parallel halves") {
  const Dataset data = SmallData(3);
  Curator curator(data, 1.0, 9, 0, NoiseMode::kNone);
  CHECK_FALSE(curator.is_private());
  const auto lt = curator.InitialTarget({Side::kRight, 1});
  const DecisionTree left = curator.BuildTreeExpMech(Side::kLeft, lt, 2, 0.2);
  const auto rt = curator.TargetFromTree(left);
  CHECK(rt.side() == Side::kLeft);
  const DecisionTree right =
      curator.BuildTreeExpMech(Side::kRight, rt, 2, 0.2);
  const NoisyCountTable table = curator.NoisyLeafTables(left, right, 0.4);
  const LeafCounts exact = CountLeafTables(data, left, right);
  CHECK(table.inter == exact.inter);
  CHECK(table.left == exact.left);
  const auto& ledger = curator.accountant().ledger();
  REQUIRE(ledger.size() == 6);
  CHECK(ledger[4].label == "leaf intersections");
  CHECK(ledger[4].epsilon == doctest::Approx(0.2));
  CHECK(ledger[4].partitions == 16);
  CHECK(ledger[5].label == "left leaf sizes");
  CHECK(ledger[5].partitions == 4);
  CHECK(curator.accountant().spent() == doctest::Approx(0.8));
  CHECK_THROWS_AS(curator.NoisyLeafTables(right, left, 0.1),
                  std::invalid_argument);
}

TEST_CASE("initial targets are drawn without replacement") {
  const Dataset data = SmallData(4);
  const std::size_t total =
      data.left().attribute_count() + data.right().attribute_count();
  Curator curator(data, 1.0, 11);
  for (int round = 0; round < 3; ++round) {
    std::map<Side, std::size_t> sides;
    for (std::size_t i = 0; i < total; ++i) {
      ++sides[curator.DrawInitialTarget().side()];
    }
    CHECK(sides[Side::kLeft] == data.left().attribute_count());
    CHECK(sides[Side::kRight] == data.right().attribute_count());
  }
  CHECK(curator.accountant().spent() == 0.0);
}

TEST_CASE("tree pairs need an attribute target") {
  const Dataset data = SmallData(5);
  Curator curator(data, 1.0, 13);
  const auto target = curator.InitialTarget({Side::kLeft, 0});
  const DecisionTree tree =
      curator.BuildTreeExpMech(Side::kRight, target, 1, 0.1);
  McmcOptions options;
  options.epsilon = 0.1;
  options.max_iterations = 20;
  CHECK_THROWS_AS(
      curator.SampleTreePair(curator.TargetFromTree(tree), 2, options),
      std::invalid_argument);
  const TreePair pair = curator.SampleTreePair(target, 2, options);
  CHECK(pair.left.side() == Side::kLeft);
  CHECK(curator.accountant().ledger().back().label == "tree pair");
}

}  // namespace
}  // namespace dpr
