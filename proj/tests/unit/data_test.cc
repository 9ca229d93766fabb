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

#include <sstream>

#include "doctest.h"
#include "dpr/data.h"
#include "dpr/error.h"

namespace dpr {
namespace {

View Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseCsvView(in);
}

TEST_CASE("csv with a kinds row loads typed columns") {
  const View view = Parse("a,b\nbool,bool\n1,0\n0,0\ntrue,?\n");
  CHECK(view.entity_count() == 3);
  CHECK(view.attribute_count() == 2);
  CHECK(view.attribute(0).kind == AttributeKind::kBoolean);
  CHECK(view.column(0)[2] == 1.0);
  CHECK(View::IsMissing(view.column(1)[2]));
  CHECK(view.ObservedCount(1) == 2);
  CHECK_FALSE(view.cell(2, 1).has_value());
}

TEST_CASE("csv categories are the sorted observed values") {
  const View view = Parse("c,x\ncat,num\nred,1.5\nblue,-2\n?,3\n");
  REQUIRE(view.attribute(0).categories ==
          std::vector<std::string>{"blue", "red"});
  CHECK(view.column(0)[0] == 1.0);
  CHECK(view.column(0)[1] == 0.0);
  CHECK(view.column(1)[1] == -2.0);
}

TEST_CASE("csv errors carry the row") {
  try {
    Parse("a,b\nbool,num\n1,2\n1,zz\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.row() == 4);
  }
  CHECK_THROWS_AS(Parse("a,b\nbool,num\n1\n"), ParseError);
  CHECK_THROWS_AS(Parse("a,b\nbool,nope\n1,2\n"), SchemaError);
  CHECK_THROWS_AS(Parse("a,a\nbool,bool\n1,1\n"), SchemaError);
  CHECK_THROWS_AS(Parse("a\n"), ParseError);
  CHECK_THROWS_AS(Parse("x y\nbool\n1\n"), SchemaError);
}

TEST_CASE("arff declarations keep declared category order") {
  std::istringstream in(
      "% comment\n@relation r\n@attribute flag boolean\n"
      "@attribute color {red, green, blue}\n@attribute size numeric\n"
      "@data\n1,green,3\n0,?,4.5\n");
  const View view = ParseArffView(in);
  CHECK(view.entity_count() == 2);
  CHECK(view.attribute(1).categories ==
        std::vector<std::string>{"red", "green", "blue"});
  CHECK(view.column(1)[0] == 1.0);
  CHECK(View::IsMissing(view.column(1)[1]));
  CHECK(view.column(2)[1] == 4.5);
}

TEST_CASE("csv writer round-trips") {
  const View view = Parse("a,c,x\nbool,cat,num\n1,u,0.1\n?,v,?\n0,u,1e300\n");
  std::ostringstream out;
  WriteCsvView(out, view);
  const View back = Parse(out.str());
  REQUIRE(back.attribute_count() == 3);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t e = 0; e < 3; ++e) {
      const double x = view.column(a)[e];
      const double y = back.column(a)[e];
      CHECK(((View::IsMissing(x) && View::IsMissing(y)) || x == y));
    }
  }
}

TEST_CASE("views must agree on entities") {
  View a({{"a", AttributeKind::kBoolean, {}}}, {{1, 0}});
  View b({{"b", AttributeKind::kBoolean, {}}}, {{1}});
  CHECK_THROWS_AS(Dataset(a, b), SchemaError);
}

TEST_CASE("split points") {
  const View view = Parse(
      "b,c,x,m\nbool,cat,num,num\n1,p,3,?\n0,q,1,?\n1,r,2,?\n0,p,3,?\n");
  const std::vector<SplitPoint> s = EnumerateSplitPoints(view, Side::kRight);
  REQUIRE(s.size() == 1 + 3 + 2);
  CHECK(s[0].kind == SplitKind::kBooleanTrue);
  CHECK(s[1].kind == SplitKind::kCategoryEquals);
  CHECK(s[3].category == 2);
  CHECK(s[4].threshold == 1.5);
  CHECK(s[5].threshold == 2.5);
  for (const SplitPoint& p : s) CHECK(p.side == Side::kRight);
}

TEST_CASE("routing a missing cell") {
  const SplitPoint s{Side::kLeft, 0, SplitKind::kNumericAtMost, 1.0, 0};
  CHECK(RouteValue(s, 1.0) == Route::kPass);
  CHECK(RouteValue(s, 1.5) == Route::kFail);
  CHECK(RouteValue(s, View::Missing()) == Route::kMissing);
}

TEST_CASE("format from extension") {
  CHECK(FormatFromPath("x/y.ARFF") == DataFormat::kArff);
  CHECK(FormatFromPath("y.csv") == DataFormat::kCsv);
  CHECK_THROWS_AS(LoadView("/nonexistent/file.csv"), ParseError);
}

}  // namespace
}  // namespace dpr
