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

#include <vector>

#include "doctest.h"
#include "dpr/error.h"
#include "dpr/tree.h"
#include "test_support.h"

namespace dpr {
namespace {

View SmallView() {
  return View({{"a", AttributeKind::kBoolean, {}},
               {"x", AttributeKind::kNumeric, {}}},
              {{1, 0, 1, View::Missing()}, {1.0, 2.0, 3.0, 4.0}});
}

TEST_CASE("tree shape validation") {
  const SplitPoint a{Side::kLeft, 0, SplitKind::kBooleanTrue, 0, 0};
  CHECK_NOTHROW(DecisionTree(Side::kLeft, 0, {}));
  CHECK_NOTHROW(DecisionTree(Side::kLeft, 2, {a, a, a}));
  CHECK_THROWS_AS(DecisionTree(Side::kLeft, 2, {a, a}), std::invalid_argument);
  CHECK_THROWS_AS(DecisionTree(Side::kRight, 1, {a}), std::invalid_argument);
  CHECK_THROWS_AS(DecisionTree(Side::kLeft, kMaxTreeDepth + 1,
                               std::vector<SplitPoint>(127, a)),
                  std::invalid_argument);
}

TEST_CASE("heap navigation") {
  const SplitPoint a{Side::kLeft, 0, SplitKind::kBooleanTrue, 0, 0};
  const DecisionTree t(Side::kLeft, 3, std::vector<SplitPoint>(7, a));
  CHECK(t.leaf_count() == 8);
  CHECK(DecisionTree::PassChild(2) == 5);
  CHECK(DecisionTree::FailChild(2) == 6);
  CHECK(t.IsLeafNode(7));
  CHECK(t.LeafIndex(14) == 7);
  CHECK(t.SubtreeInternalCount(0) == 7);
  CHECK(t.SubtreeInternalCount(1) == 3);
  CHECK(t.SubtreeInternalCount(4) == 1);
  const auto path = t.LeafPath(5);  // node 12: fail, pass, fail
  REQUIRE(path.size() == 3);
  CHECK_FALSE(path[0].second);
  CHECK(path[1].second);
  CHECK_FALSE(path[2].second);
}

TEST_CASE("routing and leaf clauses") {
  const View view = SmallView();
  const SplitPoint a{Side::kLeft, 0, SplitKind::kBooleanTrue, 0, 0};
  const SplitPoint x{Side::kLeft, 1, SplitKind::kNumericAtMost, 1.5, 0};
  const DecisionTree t(Side::kLeft, 2, {a, x, x});
  CHECK(t.LeafOf(view, 0) == 0u);
  CHECK(t.LeafOf(view, 1) == 3u);
  CHECK(t.LeafOf(view, 2) == 1u);
  CHECK_FALSE(t.LeafOf(view, 3).has_value());
  CHECK(FormatClause(LeafClause(view, t, 1)) == "(a&[x>1.5])");
  CHECK(FormatClause(LeafClause(view, t, 2)) == "(!a&[x<=1.5])");
}

TEST_CASE("tree text round-trips") {
  const View view = SmallView();
  const SplitPoint a{Side::kLeft, 0, SplitKind::kBooleanTrue, 0, 0};
  const SplitPoint x{Side::kLeft, 1, SplitKind::kNumericAtMost, 2.5, 0};
  const DecisionTree t(Side::kLeft, 2, {a, x, a});
  const std::string text = FormatTree(view, t);
  CHECK(text == "(a ? ([x<=2.5] ? * : *) : (a ? * : *))");
  CHECK(ParseTree(text, view, Side::kLeft) == t);
  CHECK(FormatTree(view, DecisionTree(Side::kLeft, 0, {})) == "*");
}

TEST_CASE("random trees round-trip through text") {
  RandomSource rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const View view = testing::RandomView(rng, "v", {});
    const std::vector<SplitPoint> splits =
        EnumerateSplitPoints(view, Side::kRight);
    if (splits.empty()) continue;
    const int depth = 1 + static_cast<int>(rng.UniformIndex(4));
    const DecisionTree t = RandomSplitTree(Side::kRight, depth, splits, rng);
    REQUIRE(ParseTree(FormatTree(view, t), view, Side::kRight) == t);
  }
}

TEST_CASE("malformed tree text") {
  const View view = SmallView();
  for (const char* bad :
       {"", "(a ? * : (a ? * : *))", "(a * : *)", "(a?*:*)",
        "([x<=2.5] ? * : * )x", "(!a ? * : *)", "(nope ? * : *)",
        "([x>1] ? * : *)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ParseTree(bad, view, Side::kLeft), ParseError);
  }
}

TEST_CASE("stabilized variance") {
  std::vector<double> h = {5, 1, 2, 1, 2};
  CHECK_FALSE(StabilizedVar(h, 6, 1.0));
  CHECK(StabilizedVar(h, 4, 0.26));   // variance of {1,2,1,2} is 0.25
  CHECK_FALSE(StabilizedVar(h, 4, 0.25));
  CHECK_FALSE(StabilizedVar(h, 5, 0.26));
  CHECK_FALSE(StabilizedVar(h, 0, 1.0));
}

}  // namespace
}  // namespace dpr
