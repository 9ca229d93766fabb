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
#include "dpr/target.h"

namespace dpr {
namespace {

TEST_CASE("quantiles interpolate between order statistics") {
  const std::vector<double> v = {1, 2, 3, 4, 5, 6, 7, 8};
  CHECK(Quantile(v, 0.25) == doctest::Approx(2.75));
  CHECK(Quantile(v, 0.75) == doctest::Approx(6.25));
  CHECK(Quantile(v, 0.0) == 1.0);
  CHECK(Quantile(v, 1.0) == 8.0);
}

TEST_CASE("freedman diaconis bin count") {
  // IQR 3.5 and n = 8 give width 3.5 over a range of 7.
  CHECK(FreedmanDiaconisBins(std::vector<double>{8, 1, 2, 3, 4, 5, 6, 7}) ==
        2);
  CHECK(FreedmanDiaconisBins(std::vector<double>{0, 0, 0, 0, 1}) == 1);
  CHECK(FreedmanDiaconisBins(std::vector<double>{3, 3, 3}) == 1);
  CHECK(FreedmanDiaconisBins(std::vector<double>{7}) == 1);
  CHECK(FreedmanDiaconisBins(std::vector<double>{0, 1, 2, 3, 1e9}) == 5);
}

TEST_CASE("boolean and categorical targets") {
  const View view({{"b", AttributeKind::kBoolean, {}},
                   {"c", AttributeKind::kCategorical, {"p", "q", "r"}}},
                  {{1, 0, 0, 1}, {2, 0, 2, 2}});
  const TargetVariable b = MakeInitialTarget(view, 0);
  CHECK(b.class_count == 2);
  CHECK(b.labels == std::vector<std::uint32_t>{1, 0, 0, 1});
  CHECK_FALSE(b.unassigned.has_value());
  CHECK(b.attribute == "b");
  const TargetVariable c = MakeInitialTarget(view, 1);
  CHECK(c.class_count == 3);
  CHECK(c.ClassSizes() == std::vector<std::size_t>{1, 0, 3});
}

TEST_CASE("numeric target uses equal-width bins") {
  const View view({{"x", AttributeKind::kNumeric, {}}},
                  {{1, 2, 3, 4, 5, 6, 7, 8, View::Missing()}});
  const TargetVariable t = MakeInitialTarget(view, 0);
  CHECK(t.class_count == 3);
  REQUIRE(t.unassigned == 2u);
  CHECK(t.labels ==
        std::vector<std::uint32_t>{0, 0, 0, 0, 1, 1, 1, 1, 2});
}

TEST_CASE("attribute with nothing observed") {
  const View view({{"x", AttributeKind::kNumeric, {}}},
                  {{View::Missing(), View::Missing()}});
  CHECK_THROWS_AS(MakeInitialTarget(view, 0), DegenerateAttributeError);
}

TEST_CASE("leaf target") {
  const View view({{"a", AttributeKind::kBoolean, {}}},
                  {{1, 0, View::Missing(), 1}});
  const SplitPoint a{Side::kLeft, 0, SplitKind::kBooleanTrue, 0, 0};
  const TargetVariable t =
      TargetFromLeaves(view, DecisionTree(Side::kLeft, 1, {a}));
  CHECK(t.origin == TargetOrigin::kTreeLeaves);
  CHECK(t.class_count == 3);
  CHECK(t.unassigned == 2u);
  CHECK(t.labels == std::vector<std::uint32_t>{0, 1, 2, 0});

  const View full({{"a", AttributeKind::kBoolean, {}}}, {{1, 1}});
  const TargetVariable u =
      TargetFromLeaves(full, DecisionTree(Side::kLeft, 1, {a}));
  CHECK(u.class_count == 2);
  CHECK_FALSE(u.unassigned.has_value());
}

}  // namespace
}  // namespace dpr
