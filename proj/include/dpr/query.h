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

// Query text: disjunctions of optionally negated conjunctive clauses.
//
//   query   := clause ('|' clause)*
//   clause  := ['!'] '(' literal ('&' literal)* ')'
//   literal := name | '!' name | '[' name '<=' num ']' | '[' name '>' num ']'
//            | '[' name '=' cat ']' | '[' name '!=' cat ']'
//
// FormatQuery and ParseQuery are exact inverses on well-formed input.

#ifndef DPR_QUERY_H_
#define DPR_QUERY_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dpr/data.h"

namespace dpr {

enum class LiteralOp {
  kTrue,       // name
  kFalse,      // !name
  kAtMost,     // [name<=v]
  kGreater,    // [name>v]
  kEquals,     // [name=c]
  kNotEquals,  // [name!=c]
};

struct Literal {
  std::string attribute;
  LiteralOp op = LiteralOp::kTrue;
  double threshold = 0.0;
  std::string category;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause {
  bool negated = false;
  std::vector<Literal> literals;

  friend bool operator==(const Clause&, const Clause&) = default;
};

struct Query {
  std::vector<Clause> clauses;

  friend bool operator==(const Query&, const Query&) = default;
};

std::string FormatLiteral(const Literal& literal);
std::string FormatClause(const Clause& clause);
std::string FormatQuery(const Query& query);
// Throws ParseError, naming the byte offset, on malformed text.
Query ParseQuery(std::string_view text);

// The literal an entity satisfies when it takes the pass (or fail) edge of
// `split`.
Literal LiteralFromSplit(const View& view, const SplitPoint& split, bool pass);

// A query resolved against a view's schema for fast evaluation.
class BoundQuery {
 public:
  // Throws SchemaError if an attribute is unknown or a literal does not fit
  // the attribute's kind.
  BoundQuery(const View& view, const Query& query);

  // A literal on a missing cell is false; a negated clause is the exact
  // complement of its conjunction.
  bool Matches(std::size_t entity) const;
  std::vector<bool> Support() const;

 private:
  struct BoundLiteral {
    std::size_t attribute;
    LiteralOp op;
    double value;
  };
  struct BoundClause {
    bool negated;
    std::vector<BoundLiteral> literals;
  };

  const View* view_;
  std::vector<BoundClause> clauses_;
};

}  // namespace dpr

#endif  // DPR_QUERY_H_
