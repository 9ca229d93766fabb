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

// Two-view tabular data: typed attributes, missing cells, ingestion from
// delimited text, and enumeration of the binary split tests a tree may use.

#ifndef DPR_DATA_H_
#define DPR_DATA_H_

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dpr {

enum class Side { kLeft = 0, kRight = 1 };

inline Side Opposite(Side side) {
  return side == Side::kLeft ? Side::kRight : Side::kLeft;
}
const char* SideName(Side side);

enum class AttributeKind { kBoolean, kCategorical, kNumeric };

const char* KindToken(AttributeKind kind);

struct Attribute {
  std::string name;
  AttributeKind kind = AttributeKind::kBoolean;
  // Categorical only; a cell stores the index into this list.
  std::vector<std::string> categories;
};

// True if `name` can appear verbatim in query text.
bool IsValidAttributeName(std::string_view name);
bool IsValidCategory(std::string_view category);

// One table of the dataset. Storage is column-major; a missing cell is NaN.
// Boolean cells hold 0 or 1, categorical cells a category index, numeric
// cells the value itself. Immutable once constructed.
class View {
 public:
  View() = default;
  // Throws SchemaError when columns disagree in length, a cell does not fit
  // its attribute's kind, names repeat, or a categorical attribute declares
  // fewer than two categories.
  View(std::vector<Attribute> attributes,
       std::vector<std::vector<double>> columns);

  std::size_t entity_count() const { return entity_count_; }
  std::size_t attribute_count() const { return attributes_.size(); }
  const std::vector<Attribute>& attributes() const { return attributes_; }
  const Attribute& attribute(std::size_t index) const {
    return attributes_.at(index);
  }
  std::optional<std::size_t> FindAttribute(std::string_view name) const;

  std::span<const double> column(std::size_t attribute) const {
    return columns_.at(attribute);
  }
  std::optional<double> cell(std::size_t entity, std::size_t attribute) const;
  std::size_t ObservedCount(std::size_t attribute) const;

  static bool IsMissing(double value) { return std::isnan(value); }
  static double Missing() { return std::nan(""); }

 private:
  std::vector<Attribute> attributes_;
  std::vector<std::vector<double>> columns_;
  std::size_t entity_count_ = 0;
};

// Both views describe the same entities, aligned by row index.
class Dataset {
 public:
  Dataset(View left, View right);

  const View& left() const { return left_; }
  const View& right() const { return right_; }
  const View& view(Side side) const {
    return side == Side::kLeft ? left_ : right_;
  }
  std::size_t entity_count() const { return left_.entity_count(); }

 private:
  View left_;
  View right_;
};

enum class SplitKind {
  kBooleanTrue,     // passes iff value is true
  kCategoryEquals,  // passes iff value == category
  kNumericAtMost,   // passes iff value <= threshold
};

struct SplitPoint {
  Side side = Side::kLeft;
  std::size_t attribute = 0;
  SplitKind kind = SplitKind::kBooleanTrue;
  double threshold = 0.0;  // kNumericAtMost
  std::size_t category = 0;  // kCategoryEquals

  friend bool operator==(const SplitPoint&, const SplitPoint&) = default;
};

// Outcome of a split test for one entity. Entities missing the tested
// attribute fail the test and are not routed to either child.
enum class Route { kPass, kFail, kMissing };

inline Route RouteValue(const SplitPoint& split, double value) {
  if (View::IsMissing(value)) return Route::kMissing;
  switch (split.kind) {
    case SplitKind::kBooleanTrue:
      return value != 0.0 ? Route::kPass : Route::kFail;
    case SplitKind::kCategoryEquals:
      return value == static_cast<double>(split.category) ? Route::kPass
                                                          : Route::kFail;
    case SplitKind::kNumericAtMost:
      return value <= split.threshold ? Route::kPass : Route::kFail;
  }
  return Route::kFail;
}

inline Route RouteEntity(const View& view, const SplitPoint& split,
                         std::size_t entity) {
  return RouteValue(split, view.column(split.attribute)[entity]);
}

// Booleans yield one split, categoricals one per category, numerics one per
// midpoint between consecutive distinct observed values. Order follows the
// attribute order, then category order or ascending threshold.
std::vector<SplitPoint> EnumerateSplitPoints(const View& view, Side side);

enum class DataFormat { kCsv, kArff };

// Picks kArff for a ".arff" extension, kCsv otherwise.
DataFormat FormatFromPath(const std::filesystem::path& path);

// CSV: first row names, second row kinds (bool|cat|num), then one row per
// entity; `?` marks a missing cell. ARFF-like: `@attribute name type`
// declarations followed by `@data` rows.
View ParseCsvView(std::istream& in);
View ParseArffView(std::istream& in);
View LoadView(const std::filesystem::path& path, DataFormat format);
View LoadView(const std::filesystem::path& path);

// Writes `view` in the CSV layout accepted by ParseCsvView.
void WriteCsvView(std::ostream& out, const View& view);

}  // namespace dpr

#endif  // DPR_DATA_H_
