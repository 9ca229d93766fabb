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

#include "dpr/tree.h"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "dpr/error.h"

namespace dpr {
namespace {

void FormatNode(const View& view, const DecisionTree& tree, std::size_t node,
                std::string& out) {
  if (tree.IsLeafNode(node)) {
    out += '*';
    return;
  }
  out += '(';
  out += FormatLiteral(LiteralFromSplit(view, tree.split(node), true));
  out += " ? ";
  FormatNode(view, tree, DecisionTree::PassChild(node), out);
  out += " : ";
  FormatNode(view, tree, DecisionTree::FailChild(node), out);
  out += ')';
}

struct ParsedNode {
  std::optional<SplitPoint> split;  // nullopt for a leaf
  std::unique_ptr<ParsedNode> pass;
  std::unique_ptr<ParsedNode> fail;
};

class TreeParser {
 public:
  TreeParser(std::string_view text, const View& view, Side side)
      : text_(text), view_(view), side_(side) {}

  DecisionTree Parse() {
    std::unique_ptr<ParsedNode> root = ParseNode();
    if (pos_ != text_.size()) Fail("unexpected trailing text");
    const int depth = Depth(*root);
    if (depth < 0) Fail("tree is not full");
    if (depth > kMaxTreeDepth) Fail("tree deeper than supported");
    std::vector<SplitPoint> splits((std::size_t{1} << depth) - 1);
    Flatten(*root, 0, splits);
    return DecisionTree(side_, depth, std::move(splits));
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("tree offset " + std::to_string(pos_) + ": " + what);
  }

  void Expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) {
      Fail("expected '" + std::string(token) + "'");
    }
    pos_ += token.size();
  }

  std::unique_ptr<ParsedNode> ParseNode() {
    auto node = std::make_unique<ParsedNode>();
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      return node;
    }
    Expect("(");
    const std::size_t end = text_.find(' ', pos_);
    if (end == std::string_view::npos) Fail("unterminated split");
    node->split = ParseSplit(text_.substr(pos_, end - pos_));
    pos_ = end;
    Expect(" ? ");
    node->pass = ParseNode();
    Expect(" : ");
    node->fail = ParseNode();
    Expect(")");
    return node;
  }

  SplitPoint ParseSplit(std::string_view token) {
    Query query;
    try {
      query = ParseQuery("(" + std::string(token) + ")");
    } catch (const ParseError&) {
      Fail("invalid split '" + std::string(token) + "'");
    }
    const Literal& literal = query.clauses.front().literals.front();
    if (query.clauses.front().literals.size() != 1) Fail("invalid split");
    const std::optional<std::size_t> a = view_.FindAttribute(literal.attribute);
    if (!a) Fail("unknown attribute '" + literal.attribute + "'");
    const Attribute& attr = view_.attribute(*a);
    SplitPoint split{side_, *a, SplitKind::kBooleanTrue, 0.0, 0};
    if (literal.op == LiteralOp::kTrue &&
        attr.kind == AttributeKind::kBoolean) {
      return split;
    }
    if (literal.op == LiteralOp::kAtMost &&
        attr.kind == AttributeKind::kNumeric) {
      split.kind = SplitKind::kNumericAtMost;
      split.threshold = literal.threshold;
      return split;
    }
    if (literal.op == LiteralOp::kEquals &&
        attr.kind == AttributeKind::kCategorical) {
      const auto it = std::find(attr.categories.begin(), attr.categories.end(),
                                literal.category);
      if (it == attr.categories.end()) Fail("unknown category");
      split.kind = SplitKind::kCategoryEquals;
      split.category = static_cast<std::size_t>(it - attr.categories.begin());
      return split;
    }
    Fail("split test does not fit attribute '" + attr.name + "'");
  }

  // -1 when leaves sit at different depths.
  static int Depth(const ParsedNode& node) {
    if (!node.split) return 0;
    const int pass = Depth(*node.pass);
    const int fail = Depth(*node.fail);
    if (pass < 0 || pass != fail) return -1;
    return pass + 1;
  }

  static void Flatten(const ParsedNode& node, std::size_t id,
                      std::vector<SplitPoint>& splits) {
    if (!node.split) return;
    splits[id] = *node.split;
    Flatten(*node.pass, DecisionTree::PassChild(id), splits);
    Flatten(*node.fail, DecisionTree::FailChild(id), splits);
  }

  std::string_view text_;
  const View& view_;
  Side side_;
  std::size_t pos_ = 0;
};

}  // namespace

DecisionTree::DecisionTree(Side side, int depth, std::vector<SplitPoint> splits)
    : side_(side), depth_(depth), splits_(std::move(splits)) {
  if (depth < 0 || depth > kMaxTreeDepth) {
    throw std::invalid_argument("tree depth must be in [0, " +
                                std::to_string(kMaxTreeDepth) + "]");
  }
  if (splits_.size() != (std::size_t{1} << depth) - 1) {
    throw std::invalid_argument("a full tree of depth " +
                                std::to_string(depth) + " needs " +
                                std::to_string((1u << depth) - 1) + " splits");
  }
  for (const SplitPoint& split : splits_) {
    if (split.side != side) {
      throw std::invalid_argument("split refers to the other view");
    }
  }
}

void DecisionTree::set_split(std::size_t node, const SplitPoint& split) {
  if (split.side != side_) {
    throw std::invalid_argument("split refers to the other view");
  }
  splits_.at(node) = split;
}

std::size_t DecisionTree::SubtreeInternalCount(std::size_t node) const {
  if (IsLeafNode(node)) return 0;
  // Heap depth of `node` is floor(log2(node + 1)).
  int level = 0;
  for (std::size_t n = node + 1; n > 1; n >>= 1) ++level;
  return (std::size_t{1} << (depth_ - level)) - 1;
}

std::optional<std::size_t> DecisionTree::LeafOf(const View& view,
                                                std::size_t entity) const {
  std::size_t node = 0;
  while (!IsLeafNode(node)) {
    switch (RouteEntity(view, splits_[node], entity)) {
      case Route::kPass:
        node = PassChild(node);
        break;
      case Route::kFail:
        node = FailChild(node);
        break;
      case Route::kMissing:
        return std::nullopt;
    }
  }
  return LeafIndex(node);
}

std::vector<std::pair<SplitPoint, bool>> DecisionTree::LeafPath(
    std::size_t leaf) const {
  if (leaf >= leaf_count()) throw std::out_of_range("leaf index");
  std::vector<std::pair<SplitPoint, bool>> path;
  std::size_t node = leaf + splits_.size();
  while (node > 0) {
    const std::size_t parent = (node - 1) / 2;
    path.emplace_back(splits_[parent], node == PassChild(parent));
    node = parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

DecisionTree RandomSplitTree(Side side, int depth,
                             std::span<const SplitPoint> candidates,
                             RandomSource& rng) {
  if (depth < 0 || depth > kMaxTreeDepth) {
    throw std::invalid_argument("tree depth out of range");
  }
  const std::size_t internal = (std::size_t{1} << depth) - 1;
  if (internal > 0 && candidates.empty()) {
    throw std::invalid_argument("view has no split points");
  }
  std::vector<SplitPoint> splits;
  splits.reserve(internal);
  for (std::size_t i = 0; i < internal; ++i) {
    splits.push_back(candidates[rng.UniformIndex(candidates.size())]);
  }
  return DecisionTree(side, depth, std::move(splits));
}

Clause LeafClause(const View& view, const DecisionTree& tree,
                  std::size_t leaf) {
  Clause clause;
  for (const auto& [split, passed] : tree.LeafPath(leaf)) {
    clause.literals.push_back(LiteralFromSplit(view, split, passed));
  }
  return clause;
}

std::string FormatTree(const View& view, const DecisionTree& tree) {
  std::string out;
  FormatNode(view, tree, 0, out);
  return out;
}

DecisionTree ParseTree(std::string_view text, const View& view, Side side) {
  return TreeParser(text, view, side).Parse();
}

bool StabilizedVar(std::span<const double> history, std::size_t window,
                   double threshold) {
  if (window == 0 || history.size() < window) return false;
  const std::span<const double> tail = history.last(window);
  double mean = 0.0;
  for (double x : tail) mean += x;
  mean /= static_cast<double>(window);
  double var = 0.0;
  for (double x : tail) var += (x - mean) * (x - mean);
  var /= static_cast<double>(window);
  return var < threshold;
}

}  // namespace dpr
