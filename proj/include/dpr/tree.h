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

// Full binary decision trees of fixed depth. Internal nodes are stored in
// heap order: node i has pass child 2i+1 and fail child 2i+2, and node ids
// past the internal range denote leaves. A tree carries only its splits;
// per-node statistics live server-side in FittedTree.

#ifndef DPR_TREE_H_
#define DPR_TREE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dpr/data.h"
#include "dpr/query.h"
#include "dpr/random.h"

namespace dpr {

// Leaf sets are handled as 64-bit masks, which bounds the depth.
inline constexpr int kMaxTreeDepth = 6;

class DecisionTree {
 public:
  // Throws std::invalid_argument unless depth is in [0, kMaxTreeDepth],
  // there are exactly 2^depth - 1 splits, and every split is on `side`.
  DecisionTree(Side side, int depth, std::vector<SplitPoint> splits);

  Side side() const { return side_; }
  int depth() const { return depth_; }
  std::size_t internal_count() const { return splits_.size(); }
  std::size_t leaf_count() const { return std::size_t{1} << depth_; }
  std::span<const SplitPoint> splits() const { return splits_; }
  const SplitPoint& split(std::size_t node) const { return splits_.at(node); }
  void set_split(std::size_t node, const SplitPoint& split);

  static std::size_t PassChild(std::size_t node) { return 2 * node + 1; }
  static std::size_t FailChild(std::size_t node) { return 2 * node + 2; }
  bool IsLeafNode(std::size_t node) const { return node >= splits_.size(); }
  std::size_t LeafIndex(std::size_t node) const {
    return node - splits_.size();
  }
  // Internal nodes in the subtree rooted at `node`, itself included.
  std::size_t SubtreeInternalCount(std::size_t node) const;

  // nullopt when the entity reaches a split on a missing cell.
  std::optional<std::size_t> LeafOf(const View& view,
                                    std::size_t entity) const;

  // Root-to-leaf (split, passed) pairs.
  std::vector<std::pair<SplitPoint, bool>> LeafPath(std::size_t leaf) const;

  friend bool operator==(const DecisionTree&, const DecisionTree&) = default;

 private:
  Side side_;
  int depth_;
  std::vector<SplitPoint> splits_;
};

// Every split drawn uniformly from `candidates`. Throws std::invalid_argument
// when depth > 0 and `candidates` is empty.
DecisionTree RandomSplitTree(Side side, int depth,
                             std::span<const SplitPoint> candidates,
                             RandomSource& rng);

// The conjunction of the edge tests on the path to `leaf`.
Clause LeafClause(const View& view, const DecisionTree& tree,
                  std::size_t leaf);

// Nested form `(test ? pass : fail)` with `*` for a leaf, where `test` is
// the literal of the pass edge.
std::string FormatTree(const View& view, const DecisionTree& tree);
// Inverse of FormatTree. Throws ParseError on malformed or non-full trees.
DecisionTree ParseTree(std::string_view text, const View& view, Side side);

// True iff history.size() >= window and the population variance of the
// last `window` entries is below `threshold`.
bool StabilizedVar(std::span<const double> history, std::size_t window,
                   double threshold);

}  // namespace dpr

#endif  // DPR_TREE_H_
