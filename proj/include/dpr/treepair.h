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

// Joint Metropolis-Hastings sampling of a pair of matched trees, one per
// view. The primary tree lives on the view that does not hold the
// initialization attribute and is scored against the initial target; the
// secondary tree is scored against the primary tree's leaves.

#ifndef DPR_TREEPAIR_H_
#define DPR_TREEPAIR_H_

#include <cstddef>
#include <span>
#include <vector>

#include "dpr/data.h"
#include "dpr/fitted_tree.h"
#include "dpr/induction.h"
#include "dpr/random.h"
#include "dpr/target.h"
#include "dpr/tree.h"

namespace dpr {

inline constexpr double kPairScoreSensitivity = 1.0;

// q_primary * (1 + q_secondary) / 2.
inline double PairScore(double q_primary, double q_secondary) {
  return q_primary * (1.0 + q_secondary) / 2.0;
}

struct TreePair {
  DecisionTree left;
  DecisionTree right;
};

class TreePairChain {
 public:
  // `primary` is the side of the tree scored against `initial`.
  TreePairChain(const Dataset& data, std::span<const SplitPoint> left_splits,
                std::span<const SplitPoint> right_splits, Side primary,
                const TargetVariable& initial, int depth, RandomSource& rng);

  // Records the current score, proposes a node replacement in either tree,
  // and accepts or reverts. An accepted primary change relabels the
  // secondary target for every entity that changed primary leaf.
  void Step(double epsilon);

  double score() const;
  Side primary_side() const { return primary_; }
  const FittedTree& primary() const { return primary_tree_; }
  const FittedTree& secondary() const { return secondary_tree_; }
  const FittedTree& tree(Side side) const {
    return side == primary_ ? primary_tree_ : secondary_tree_;
  }
  TreePair pair() const;
  std::span<const double> history() const { return history_; }
  std::size_t accepted() const { return accepted_; }

  // Target of the secondary tree: primary leaf index, with entities the
  // primary tree cannot route in class leaf_count.
  static std::vector<std::uint32_t> LeafLabels(const FittedTree& primary);

 private:
  std::span<const SplitPoint> candidates(Side side) const {
    return side == Side::kLeft ? left_splits_ : right_splits_;
  }
  void RelabelSecondary(std::span<const FittedTree::LeafMove> moves,
                        bool forward);

  std::span<const SplitPoint> left_splits_;
  std::span<const SplitPoint> right_splits_;
  Side primary_;
  RandomSource& rng_;
  FittedTree primary_tree_;
  FittedTree secondary_tree_;
  std::vector<double> history_;
  std::size_t accepted_ = 0;
};

// Probability that a single Step proposes state `to` from state `from`:
// a node is chosen uniformly from both trees' internal nodes, then the new
// split and every split below it uniformly from that tree's candidates.
double ProposalProbability(const TreePair& from, const TreePair& to,
                           std::size_t left_candidates,
                           std::size_t right_candidates);

// Runs a chain until max_iterations or StabilizedVar fires. `initial_side`
// is the view holding the initialization attribute.
TreePair SampleTreePair(const Dataset& data,
                        std::span<const SplitPoint> left_splits,
                        std::span<const SplitPoint> right_splits,
                        Side initial_side, const TargetVariable& initial,
                        int depth, const McmcOptions& options,
                        RandomSource& rng);

}  // namespace dpr

#endif  // DPR_TREEPAIR_H_
