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

// Server-side state of a tree over one view: which entities reach each
// node and the per-leaf class tables against a target. None of this may
// leave the curator.

#ifndef DPR_FITTED_TREE_H_
#define DPR_FITTED_TREE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dpr/data.h"
#include "dpr/random.h"
#include "dpr/target.h"
#include "dpr/tree.h"

namespace dpr {

class FittedTree {
 public:
  static constexpr std::int32_t kUnrouted = -1;

  struct LeafMove {
    std::uint32_t entity;
    std::int32_t from;  // leaf index or kUnrouted
    std::int32_t to;
  };

  // `class_count` may exceed the largest label; unused classes stay empty.
  FittedTree(const View& view, DecisionTree tree,
             std::vector<std::uint32_t> labels, std::size_t class_count);
  FittedTree(const View& view, DecisionTree tree, const TargetVariable& target);

  const View& view() const { return *view_; }
  const DecisionTree& tree() const { return tree_; }
  std::size_t class_count() const { return class_count_; }
  std::span<const std::uint32_t> labels() const { return labels_; }
  // Leaf reached by each entity, kUnrouted if a split hit a missing cell.
  std::span<const std::int32_t> leaf_of() const { return leaf_of_; }

  std::size_t leaf_size(std::size_t leaf) const { return leaf_size_.at(leaf); }
  std::size_t leaf_class_count(std::size_t leaf, std::size_t c) const {
    return counts_.at(leaf * class_count_ + c);
  }
  std::size_t routed_count() const;

  // Sum over leaves of -tau_n (1 - sum_c (tau_nc / tau_n)^2), in [-tau, 0].
  double QualityG1() const;
  // Sum over leaves of (tau_n / tau) sum_c (tau_nc / tau_n)^2, in [0, 1].
  // tau is the total entity count, routed or not.
  double QualityNorm() const;

  // Sets the split of internal `node`, redraws every split below it
  // uniformly from `candidates`, and re-routes the entities reaching `node`.
  // The previous state is kept until the next call for UndoReplace.
  void ReplaceNode(std::size_t node, const SplitPoint& split,
                   std::span<const SplitPoint> candidates, RandomSource& rng);
  // Same as ReplaceNode but with the whole new subtree given in heap order
  // relative to `node`.
  void ReplaceSubtree(std::size_t node, std::span<const SplitPoint> subtree);
  void UndoReplace();
  // Entities whose leaf changed in the last ReplaceNode.
  std::span<const LeafMove> last_moves() const { return moves_; }

  // Changes one entity's target label, keeping the leaf tables current.
  void Relabel(std::size_t entity, std::uint32_t label);

 private:
  void Route(std::size_t node);
  void AddToLeaf(std::int32_t leaf, std::uint32_t label);
  void RemoveFromLeaf(std::int32_t leaf, std::uint32_t label);

  const View* view_;
  DecisionTree tree_;
  std::vector<std::uint32_t> labels_;
  std::size_t class_count_;
  // Entities reaching each node, internal nodes and leaves, heap order.
  std::vector<std::vector<std::uint32_t>> members_;
  std::vector<std::int32_t> leaf_of_;
  std::vector<std::uint32_t> counts_;  // leaf-major class table
  std::vector<std::uint64_t> leaf_size_;
  std::vector<std::uint64_t> leaf_sumsq_;

  // Undo record of the last replacement.
  std::size_t undo_node_ = 0;
  bool has_undo_ = false;
  std::vector<SplitPoint> undo_splits_;
  std::vector<std::vector<std::uint32_t>> undo_members_;
  std::vector<LeafMove> moves_;
};

}  // namespace dpr

#endif  // DPR_FITTED_TREE_H_
