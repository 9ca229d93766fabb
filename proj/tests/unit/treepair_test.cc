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
#include <vector>

#include "doctest.h"
#include "dpr/target.h"
#include "dpr/treepair.h"
#include "test_support.h"

namespace dpr {
namespace {

DecisionTree Perturb(const DecisionTree& tree,
                     const std::vector<SplitPoint>& splits,
                     RandomSource& rng) {
  DecisionTree out = tree;
  const std::size_t root = rng.UniformIndex(tree.internal_count());
  std::vector<std::size_t> stack = {root};
  while (!stack.empty()) {
    const std::size_t n = stack.back();
    stack.pop_back();
    if (tree.IsLeafNode(n)) continue;
    out.set_split(n, splits[rng.UniformIndex(splits.size())]);
    stack.push_back(DecisionTree::PassChild(n));
    stack.push_back(DecisionTree::FailChild(n));
  }
  return out;
}

TEST_CASE("pair score range") {
  CHECK(PairScore(0.0, 1.0) == 0.0);
  CHECK(PairScore(1.0, 1.0) == 1.0);
  CHECK(PairScore(0.5, 0.0) == 0.25);
}

TEST_CASE("proposal is symmetric") {
  RandomSource rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Dataset data = testing::RandomDataset(rng, {});
    const auto ls = EnumerateSplitPoints(data.left(), Side::kLeft);
    const auto rs = EnumerateSplitPoints(data.right(), Side::kRight);
    if (ls.empty() || rs.empty()) continue;
    const int depth = 1 + static_cast<int>(rng.UniformIndex(3));
    const TreePair from{RandomSplitTree(Side::kLeft, depth, ls, rng),
                        RandomSplitTree(Side::kRight, depth, rs, rng)};
    TreePair to = from;
    if (rng.Uniform() < 0.5) {
      to.left = Perturb(from.left, ls, rng);
    } else {
      to.right = Perturb(from.right, rs, rng);
    }
    const double forward = ProposalProbability(from, to, ls.size(), rs.size());
    const double backward =
        ProposalProbability(to, from, ls.size(), rs.size());
    REQUIRE(forward > 0.0);
    REQUIRE(forward == doctest::Approx(backward).epsilon(1e-12));
  }
}

TEST_CASE("proposal mass sums to one on a small space") {
  const View l({{"a", AttributeKind::kBoolean, {}},
                {"x", AttributeKind::kNumeric, {}}},
               {{1, 0, 1}, {1, 2, 3}});
  const View r({{"b", AttributeKind::kBoolean, {}}}, {{0, 1, 1}});
  const auto ls = EnumerateSplitPoints(l, Side::kLeft);
  const auto rs = EnumerateSplitPoints(r, Side::kRight);
  REQUIRE(ls.size() == 3);
  REQUIRE(rs.size() == 1);
  const TreePair from{DecisionTree(Side::kLeft, 1, {ls[0]}),
                      DecisionTree(Side::kRight, 1, {rs[0]})};
  double total = 0.0;
  for (const SplitPoint& s : ls) {
    const TreePair to{DecisionTree(Side::kLeft, 1, {s}), from.right};
    total += ProposalProbability(from, to, ls.size(), rs.size());
  }
  CHECK(total == doctest::Approx(1.0));
  // Staying put: 1/2 * 1/3 via the left tree plus 1/2 * 1 via the right.
  CHECK(ProposalProbability(from, from, 3, 1) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("secondary target follows the primary leaves") {
  RandomSource rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    testing::RandomDataSpec spec;
    spec.entities = 80;
    spec.missing = trial % 2 ? 0.1 : 0.0;
    const Dataset data = testing::RandomDataset(rng, spec);
    const auto ls = EnumerateSplitPoints(data.left(), Side::kLeft);
    const auto rs = EnumerateSplitPoints(data.right(), Side::kRight);
    if (ls.empty() || rs.empty()) continue;
    std::size_t attr = 0;
    while (data.right().ObservedCount(attr) == 0) ++attr;
    const TargetVariable initial = MakeInitialTarget(data.right(), attr);
    TreePairChain chain(data, ls, rs, Side::kLeft, initial, 2, rng);
    for (int step = 0; step < 200; ++step) {
      chain.Step(trial % 3 == 0 ? 50.0 : 1.0);
      const std::vector<std::uint32_t> want =
          TreePairChain::LeafLabels(chain.primary());
      const auto got = chain.secondary().labels();
      REQUIRE(std::equal(want.begin(), want.end(), got.begin(), got.end()));
      const auto table = testing::BruteLeafClassTable(
          data.view(Opposite(chain.primary_side())), chain.secondary().tree(),
          want, chain.secondary().class_count());
      REQUIRE(chain.secondary().QualityNorm() ==
              doctest::Approx(testing::BruteQualityNorm(table, 80.0)));
    }
    CHECK(chain.history().size() == 200);
    CHECK(chain.score() >= 0.0);
    CHECK(chain.score() <= 1.0);
    CHECK(chain.pair().left.side() == Side::kLeft);
    CHECK(chain.pair().right.side() == Side::kRight);
  }
}

TEST_CASE("tree pair sampling is deterministic") {
  RandomSource g(1);
  const Dataset data = testing::RandomDataset(g, {});
  const auto ls = EnumerateSplitPoints(data.left(), Side::kLeft);
  const auto rs = EnumerateSplitPoints(data.right(), Side::kRight);
  const TargetVariable initial = MakeInitialTarget(data.left(), 0);
  McmcOptions options;
  options.max_iterations = 300;
  RandomSource a(5, 2);
  RandomSource b(5, 2);
  const TreePair x =
      SampleTreePair(data, ls, rs, Side::kLeft, initial, 2, options, a);
  const TreePair y =
      SampleTreePair(data, ls, rs, Side::kLeft, initial, 2, options, b);
  CHECK(x.left == y.left);
  CHECK(x.right == y.right);
}

}  // namespace
}  // namespace dpr
