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

#include "dpr/data.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "dpr/error.h"
#include "dpr/text.h"

namespace dpr {

const char* SideName(Side side) { return side == Side::kLeft ? "L" : "R"; }

const char* KindToken(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::kBoolean:
      return "bool";
    case AttributeKind::kCategorical:
      return "cat";
    case AttributeKind::kNumeric:
      return "num";
  }
  return "?";
}

bool IsValidAttributeName(std::string_view name) {
  if (name.empty() || name == "?") return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    switch (c) {
      case '(': case ')': case '[': case ']': case '&': case '|':
      case '!': case '<': case '=': case '>': case ',': case '"':
        return false;
      default:
        break;
    }
  }
  return true;
}

bool IsValidCategory(std::string_view category) {
  if (category.empty() || category == "?") return false;
  return category.find_first_of("],\"") == std::string_view::npos &&
         Trim(category) == category;
}

View::View(std::vector<Attribute> attributes,
           std::vector<std::vector<double>> columns)
    : attributes_(std::move(attributes)), columns_(std::move(columns)) {
  if (attributes_.size() != columns_.size()) {
    throw SchemaError("view has " + std::to_string(attributes_.size()) +
                      " attributes but " + std::to_string(columns_.size()) +
                      " columns");
  }
  entity_count_ = columns_.empty() ? 0 : columns_.front().size();
  std::set<std::string_view> names;
  for (std::size_t a = 0; a < attributes_.size(); ++a) {
    const Attribute& attr = attributes_[a];
    if (!IsValidAttributeName(attr.name)) {
      throw SchemaError("invalid attribute name '" + attr.name + "'");
    }
    if (!names.insert(attr.name).second) {
      throw SchemaError("duplicate attribute name '" + attr.name + "'");
    }
    if (columns_[a].size() != entity_count_) {
      throw SchemaError("column '" + attr.name + "' has " +
                        std::to_string(columns_[a].size()) + " cells, expected " +
                        std::to_string(entity_count_));
    }
    if (attr.kind == AttributeKind::kCategorical) {
      if (attr.categories.size() < 2) {
        throw SchemaError("categorical attribute '" + attr.name +
                          "' needs at least two categories");
      }
      for (const std::string& c : attr.categories) {
        if (!IsValidCategory(c)) {
          throw SchemaError("invalid category '" + c + "' in '" + attr.name +
                            "'");
        }
      }
    } else if (!attr.categories.empty()) {
      throw SchemaError("non-categorical attribute '" + attr.name +
                        "' declares categories");
    }
    for (double v : columns_[a]) {
      if (IsMissing(v)) continue;
      bool ok = true;
      switch (attr.kind) {
        case AttributeKind::kBoolean:
          ok = v == 0.0 || v == 1.0;
          break;
        case AttributeKind::kCategorical:
          ok = v >= 0.0 && v < static_cast<double>(attr.categories.size()) &&
               v == std::floor(v);
          break;
        case AttributeKind::kNumeric:
          ok = std::isfinite(v);
          break;
      }
      if (!ok) {
        throw SchemaError("cell value does not fit attribute '" + attr.name +
                          "'");
      }
    }
  }
}

std::optional<std::size_t> View::FindAttribute(std::string_view name) const {
  for (std::size_t a = 0; a < attributes_.size(); ++a) {
    if (attributes_[a].name == name) return a;
  }
  return std::nullopt;
}

std::optional<double> View::cell(std::size_t entity,
                                 std::size_t attribute) const {
  const double v = columns_.at(attribute).at(entity);
  if (IsMissing(v)) return std::nullopt;
  return v;
}

std::size_t View::ObservedCount(std::size_t attribute) const {
  const auto col = column(attribute);
  return static_cast<std::size_t>(std::count_if(
      col.begin(), col.end(), [](double v) { return !IsMissing(v); }));
}

Dataset::Dataset(View left, View right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.entity_count() != right_.entity_count()) {
    throw SchemaError("views disagree on entity count: " +
                      std::to_string(left_.entity_count()) + " vs " +
                      std::to_string(right_.entity_count()));
  }
}

std::vector<SplitPoint> EnumerateSplitPoints(const View& view, Side side) {
  std::vector<SplitPoint> splits;
  for (std::size_t a = 0; a < view.attribute_count(); ++a) {
    const Attribute& attr = view.attribute(a);
    if (view.ObservedCount(a) == 0) continue;
    switch (attr.kind) {
      case AttributeKind::kBoolean:
        splits.push_back({side, a, SplitKind::kBooleanTrue, 0.0, 0});
        break;
      case AttributeKind::kCategorical:
        for (std::size_t c = 0; c < attr.categories.size(); ++c) {
          splits.push_back({side, a, SplitKind::kCategoryEquals, 0.0, c});
        }
        break;
      case AttributeKind::kNumeric: {
        std::vector<double> values;
        for (double v : view.column(a)) {
          if (!View::IsMissing(v)) values.push_back(v);
        }
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (std::size_t i = 0; i + 1 < values.size(); ++i) {
          const double lo = values[i];
          const double hi = values[i + 1];
          double mid = lo + (hi - lo) / 2.0;
          // Adjacent doubles can round the midpoint up onto `hi`.
          if (mid >= hi) mid = lo;
          splits.push_back({side, a, SplitKind::kNumericAtMost, mid, 0});
        }
        break;
      }
    }
  }
  return splits;
}

DataFormat FormatFromPath(const std::filesystem::path& path) {
  return ToLower(path.extension().string()) == ".arff" ? DataFormat::kArff
                                                       : DataFormat::kCsv;
}

namespace {

struct PendingColumn {
  std::string name;
  AttributeKind kind = AttributeKind::kBoolean;
  bool declared_categories = false;
  std::vector<std::string> categories;
};

struct RawRow {
  std::size_t line = 0;
  std::vector<std::string_view> cells;
};

constexpr std::string_view kMissingToken = "?";

std::optional<AttributeKind> ParseKind(std::string_view token) {
  const std::string t = ToLower(Trim(token));
  if (t == "bool" || t == "boolean") return AttributeKind::kBoolean;
  if (t == "cat" || t == "categorical") return AttributeKind::kCategorical;
  if (t == "num" || t == "numeric" || t == "real" || t == "integer") {
    return AttributeKind::kNumeric;
  }
  return std::nullopt;
}

std::optional<double> ParseBoolean(std::string_view token) {
  const std::string t = ToLower(token);
  if (t == "1" || t == "true" || t == "t" || t == "yes" || t == "y") {
    return 1.0;
  }
  if (t == "0" || t == "false" || t == "f" || t == "no" || t == "n") {
    return 0.0;
  }
  return std::nullopt;
}

View BuildView(std::vector<PendingColumn> pending,
               const std::vector<RawRow>& rows) {
  std::vector<Attribute> attributes;
  std::vector<std::vector<double>> columns(pending.size());
  for (std::size_t a = 0; a < pending.size(); ++a) {
    PendingColumn& col = pending[a];
    columns[a].reserve(rows.size());
    std::map<std::string, std::size_t, std::less<>> category_index;
    if (col.kind == AttributeKind::kCategorical) {
      if (!col.declared_categories) {
        std::set<std::string, std::less<>> seen;
        for (const RawRow& row : rows) {
          const std::string_view token = row.cells[a];
          if (token != kMissingToken) seen.emplace(token);
        }
        col.categories.assign(seen.begin(), seen.end());
      }
      for (std::size_t c = 0; c < col.categories.size(); ++c) {
        category_index.emplace(col.categories[c], c);
      }
    }
    for (const RawRow& row : rows) {
      const std::string_view token = row.cells[a];
      if (token == kMissingToken) {
        columns[a].push_back(View::Missing());
        continue;
      }
      std::optional<double> value;
      switch (col.kind) {
        case AttributeKind::kBoolean:
          value = ParseBoolean(token);
          break;
        case AttributeKind::kNumeric:
          value = ParseNumber(token);
          if (value && !std::isfinite(*value)) value.reset();
          break;
        case AttributeKind::kCategorical: {
          auto it = category_index.find(token);
          if (it != category_index.end()) {
            value = static_cast<double>(it->second);
          }
          break;
        }
      }
      if (!value) {
        throw ParseError("bad " + std::string(KindToken(col.kind)) +
                             " value '" + std::string(token) +
                             "' in column '" + col.name + "'",
                         row.line);
      }
      columns[a].push_back(*value);
    }
    attributes.push_back({col.name, col.kind, std::move(col.categories)});
  }
  return View(std::move(attributes), std::move(columns));
}

std::vector<std::string_view> SplitCells(std::string_view line) {
  std::vector<std::string_view> cells = SplitOn(line, ',');
  for (auto& c : cells) c = Trim(c);
  return cells;
}

// Reads lines, keeping them alive for the string_views handed out.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line, or nullopt at end of input.
  std::optional<std::string_view> Next(bool skip_percent_comments = false) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::string_view trimmed = Trim(line);
      if (trimmed.empty()) continue;
      if (skip_percent_comments && trimmed.front() == '%') continue;
      storage_.push_back(std::string(trimmed));
      return std::string_view(storage_.back());
    }
    return std::nullopt;
  }

  std::size_t line_number() const { return line_number_; }

 private:
  std::istream& in_;
  std::size_t line_number_ = 0;
  std::deque<std::string> storage_;
};

}  // namespace

View ParseCsvView(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.Next();
  if (!header) throw ParseError("missing header row", reader.line_number());
  const std::size_t header_line = reader.line_number();
  const auto kinds = reader.Next();
  if (!kinds) throw ParseError("missing kinds row", reader.line_number() + 1);
  const std::size_t kinds_line = reader.line_number();

  const auto names = SplitCells(*header);
  const auto kind_tokens = SplitCells(*kinds);
  if (kind_tokens.size() != names.size()) {
    throw ParseError("kinds row has " + std::to_string(kind_tokens.size()) +
                         " cells, header has " + std::to_string(names.size()),
                     kinds_line);
  }
  std::vector<PendingColumn> pending;
  for (std::size_t a = 0; a < names.size(); ++a) {
    const auto kind = ParseKind(kind_tokens[a]);
    if (!kind) {
      throw SchemaError("unknown attribute kind '" +
                        std::string(kind_tokens[a]) + "' for column '" +
                        std::string(names[a]) + "'");
    }
    if (!IsValidAttributeName(names[a])) {
      throw SchemaError("invalid attribute name '" + std::string(names[a]) +
                        "' on row " + std::to_string(header_line));
    }
    pending.push_back({std::string(names[a]), *kind, false, {}});
  }

  std::vector<RawRow> rows;
  while (const auto line = reader.Next()) {
    RawRow row{reader.line_number(), SplitCells(*line)};
    if (row.cells.size() != names.size()) {
      throw ParseError("expected " + std::to_string(names.size()) +
                           " cells, found " + std::to_string(row.cells.size()),
                       row.line);
    }
    rows.push_back(std::move(row));
  }
  return BuildView(std::move(pending), rows);
}

View ParseArffView(std::istream& in) {
  LineReader reader(in);
  std::vector<PendingColumn> pending;
  bool in_data = false;
  std::vector<RawRow> rows;
  while (const auto line = reader.Next(/*skip_percent_comments=*/true)) {
    if (!in_data) {
      const std::string lower = ToLower(*line);
      if (lower.starts_with("@relation")) continue;
      if (lower.starts_with("@data")) {
        in_data = true;
        continue;
      }
      if (!lower.starts_with("@attribute")) {
        throw ParseError("expected @attribute or @data", reader.line_number());
      }
      std::string_view rest = Trim(line->substr(10));
      const std::size_t space = rest.find_first_of(" \t");
      if (space == std::string_view::npos) {
        throw ParseError("attribute declaration lacks a type",
                         reader.line_number());
      }
      const std::string_view name = rest.substr(0, space);
      const std::string_view type = Trim(rest.substr(space));
      if (!IsValidAttributeName(name)) {
        throw SchemaError("invalid attribute name '" + std::string(name) +
                          "' on row " + std::to_string(reader.line_number()));
      }
      PendingColumn col{std::string(name), AttributeKind::kCategorical, false,
                        {}};
      if (type.front() == '{') {
        if (type.back() != '}') {
          throw ParseError("unterminated nominal declaration",
                           reader.line_number());
        }
        col.declared_categories = true;
        for (auto c : SplitCells(type.substr(1, type.size() - 2))) {
          col.categories.emplace_back(c);
        }
      } else {
        const auto kind = ParseKind(type);
        if (!kind) {
          throw SchemaError("unknown attribute kind '" + std::string(type) +
                            "' for attribute '" + col.name + "'");
        }
        col.kind = *kind;
      }
      pending.push_back(std::move(col));
      continue;
    }
    RawRow row{reader.line_number(), SplitCells(*line)};
    if (row.cells.size() != pending.size()) {
      throw ParseError("expected " + std::to_string(pending.size()) +
                           " cells, found " + std::to_string(row.cells.size()),
                       row.line);
    }
    rows.push_back(std::move(row));
  }
  if (!in_data) throw ParseError("missing @data section");
  return BuildView(std::move(pending), rows);
}

View LoadView(const std::filesystem::path& path, DataFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return format == DataFormat::kArff ? ParseArffView(in) : ParseCsvView(in);
}

View LoadView(const std::filesystem::path& path) {
  return LoadView(path, FormatFromPath(path));
}

void WriteCsvView(std::ostream& out, const View& view) {
  const std::size_t n = view.attribute_count();
  for (std::size_t a = 0; a < n; ++a) {
    out << (a ? "," : "") << view.attribute(a).name;
  }
  out << '\n';
  for (std::size_t a = 0; a < n; ++a) {
    out << (a ? "," : "") << KindToken(view.attribute(a).kind);
  }
  out << '\n';
  for (std::size_t e = 0; e < view.entity_count(); ++e) {
    for (std::size_t a = 0; a < n; ++a) {
      if (a) out << ',';
      const double v = view.column(a)[e];
      const Attribute& attr = view.attribute(a);
      if (View::IsMissing(v)) {
        out << kMissingToken;
      } else if (attr.kind == AttributeKind::kCategorical) {
        out << attr.categories[static_cast<std::size_t>(v)];
      } else if (attr.kind == AttributeKind::kBoolean) {
        out << (v != 0.0 ? '1' : '0');
      } else {
        out << FormatNumber(v);
      }
    }
    out << '\n';
  }
}

}  // namespace dpr
