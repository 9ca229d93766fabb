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

#include "dpr/query.h"

#include <algorithm>
#include <cmath>

#include "dpr/error.h"
#include "dpr/text.h"

namespace dpr {
namespace {

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : text_(text) {}

  Query Parse() {
    Query query;
    query.clauses.push_back(ParseClause());
    while (Consume('|')) query.clauses.push_back(ParseClause());
    if (pos_ != text_.size()) Fail("unexpected trailing text");
    return query;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("query offset " + std::to_string(pos_) + ": " + what +
                     " in '" + std::string(text_) + "'");
  }

  bool Peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  bool Consume(char c) {
    if (!Peek(c)) return false;
    ++pos_;
    return true;
  }

  void Expect(char c) {
    if (!Consume(c)) Fail(std::string("expected '") + c + "'");
  }

  Clause ParseClause() {
    Clause clause;
    clause.negated = Consume('!');
    Expect('(');
    clause.literals.push_back(ParseLiteral());
    while (Consume('&')) clause.literals.push_back(ParseLiteral());
    Expect(')');
    return clause;
  }

  std::string ParseName() {
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(' || c == ')' || c == '[' || c == ']' || c == '&' ||
          c == '|' || c == '!' || c == '<' || c == '=' || c == '>') {
        break;
      }
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    if (!IsValidAttributeName(name)) Fail("invalid attribute name");
    return name;
  }

  std::string_view UntilBracket() {
    const std::size_t start = pos_;
    const std::size_t end = text_.find(']', pos_);
    if (end == std::string_view::npos) Fail("unterminated literal");
    pos_ = end;
    return text_.substr(start, end - start);
  }

  Literal ParseLiteral() {
    Literal literal;
    if (Consume('!')) {
      literal.op = LiteralOp::kFalse;
      literal.attribute = ParseName();
      return literal;
    }
    if (!Consume('[')) {
      literal.op = LiteralOp::kTrue;
      literal.attribute = ParseName();
      return literal;
    }
    literal.attribute = ParseName();
    bool numeric = false;
    if (Consume('<')) {
      Expect('=');
      literal.op = LiteralOp::kAtMost;
      numeric = true;
    } else if (Consume('>')) {
      literal.op = LiteralOp::kGreater;
      numeric = true;
    } else if (Consume('!')) {
      Expect('=');
      literal.op = LiteralOp::kNotEquals;
    } else if (Consume('=')) {
      literal.op = LiteralOp::kEquals;
    } else {
      Fail("expected comparison operator");
    }
    const std::string_view operand = UntilBracket();
    if (numeric) {
      const std::optional<double> value = ParseNumber(operand);
      if (!value || !std::isfinite(*value)) Fail("invalid number");
      literal.threshold = *value;
    } else {
      if (!IsValidCategory(operand)) Fail("invalid category");
      literal.category = std::string(operand);
    }
    Expect(']');
    return literal;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string FormatLiteral(const Literal& literal) {
  switch (literal.op) {
    case LiteralOp::kTrue:
      return literal.attribute;
    case LiteralOp::kFalse:
      return "!" + literal.attribute;
    case LiteralOp::kAtMost:
      return "[" + literal.attribute + "<=" + FormatNumber(literal.threshold) +
             "]";
    case LiteralOp::kGreater:
      return "[" + literal.attribute + ">" + FormatNumber(literal.threshold) +
             "]";
    case LiteralOp::kEquals:
      return "[" + literal.attribute + "=" + literal.category + "]";
    case LiteralOp::kNotEquals:
      return "[" + literal.attribute + "!=" + literal.category + "]";
  }
  return literal.attribute;
}

std::string FormatClause(const Clause& clause) {
  std::string out = clause.negated ? "!(" : "(";
  for (std::size_t i = 0; i < clause.literals.size(); ++i) {
    if (i > 0) out += '&';
    out += FormatLiteral(clause.literals[i]);
  }
  out += ')';
  return out;
}

std::string FormatQuery(const Query& query) {
  std::string out;
  for (std::size_t i = 0; i < query.clauses.size(); ++i) {
    if (i > 0) out += '|';
    out += FormatClause(query.clauses[i]);
  }
  return out;
}

Query ParseQuery(std::string_view text) { return QueryParser(text).Parse(); }

Literal LiteralFromSplit(const View& view, const SplitPoint& split,
                         bool pass) {
  const Attribute& attr = view.attribute(split.attribute);
  Literal literal;
  literal.attribute = attr.name;
  switch (split.kind) {
    case SplitKind::kBooleanTrue:
      literal.op = pass ? LiteralOp::kTrue : LiteralOp::kFalse;
      break;
    case SplitKind::kCategoryEquals:
      literal.op = pass ? LiteralOp::kEquals : LiteralOp::kNotEquals;
      literal.category = attr.categories.at(split.category);
      break;
    case SplitKind::kNumericAtMost:
      literal.op = pass ? LiteralOp::kAtMost : LiteralOp::kGreater;
      literal.threshold = split.threshold;
      break;
  }
  return literal;
}

BoundQuery::BoundQuery(const View& view, const Query& query) : view_(&view) {
  for (const Clause& clause : query.clauses) {
    BoundClause bound{clause.negated, {}};
    for (const Literal& literal : clause.literals) {
      const std::optional<std::size_t> a = view.FindAttribute(literal.attribute);
      if (!a) {
        throw SchemaError("unknown attribute '" + literal.attribute + "'");
      }
      const Attribute& attr = view.attribute(*a);
      BoundLiteral out{*a, literal.op, literal.threshold};
      bool fits = false;
      switch (literal.op) {
        case LiteralOp::kTrue:
        case LiteralOp::kFalse:
          fits = attr.kind == AttributeKind::kBoolean;
          break;
        case LiteralOp::kAtMost:
        case LiteralOp::kGreater:
          fits = attr.kind == AttributeKind::kNumeric;
          break;
        case LiteralOp::kEquals:
        case LiteralOp::kNotEquals: {
          if (attr.kind != AttributeKind::kCategorical) break;
          const auto it = std::find(attr.categories.begin(),
                                    attr.categories.end(), literal.category);
          if (it == attr.categories.end()) {
            throw SchemaError("unknown category '" + literal.category +
                              "' for '" + attr.name + "'");
          }
          out.value = static_cast<double>(it - attr.categories.begin());
          fits = true;
          break;
        }
      }
      if (!fits) {
        throw SchemaError("literal '" + FormatLiteral(literal) +
                          "' does not fit the kind of '" + attr.name + "'");
      }
      bound.literals.push_back(out);
    }
    clauses_.push_back(std::move(bound));
  }
}

bool BoundQuery::Matches(std::size_t entity) const {
  for (const BoundClause& clause : clauses_) {
    bool all = true;
    for (const BoundLiteral& literal : clause.literals) {
      const double v = view_->column(literal.attribute)[entity];
      bool holds = false;
      if (!View::IsMissing(v)) {
        switch (literal.op) {
          case LiteralOp::kTrue: holds = v != 0.0; break;
          case LiteralOp::kFalse: holds = v == 0.0; break;
          case LiteralOp::kAtMost: holds = v <= literal.value; break;
          case LiteralOp::kGreater: holds = v > literal.value; break;
          case LiteralOp::kEquals: holds = v == literal.value; break;
          case LiteralOp::kNotEquals: holds = v != literal.value; break;
        }
      }
      if (!holds) {
        all = false;
        break;
      }
    }
    if (all != clause.negated) return true;
  }
  return false;
}

std::vector<bool> BoundQuery::Support() const {
  std::vector<bool> support(view_->entity_count());
  for (std::size_t e = 0; e < support.size(); ++e) support[e] = Matches(e);
  return support;
}

}  // namespace dpr
