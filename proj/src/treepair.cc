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

#include "dpr/treepair.h"

#include <cmath>
#include <stdexcept>

#include "dpr/privacy.h"

namespace dpr {
namespace {

bool InSubtree(std::size_t node, std::size_t root) {
  while (node > root) node = (node - 1) / 2;
  return node == root;
}

// Sum over internal nodes k of `from` such that `to` differs from `from`
// only inside the subtree of k, of |S|^-(internal nodes under k).
double SingleTreeMass(const DecisionTree& from, const DecisionTree& to,
                      std::size_t candidates) {
  if (from.depth() != to.depth() || from.side() != to.side()) return 0.0;
  double mass = 0.0;
  for (std::size_t k = 0; k < from.internal_count(); ++k) {
    bool outside_equal = true;
    for (std::size_t n = 0; n < from.internal_count() && outside_equal; ++n) {
      if (!InSubtree(n, k) && !(from.split(n) == to.split(n))) {
        outside_equal = false;
      }
    }
    if (!outside_equal) continue;
    mass += std::pow(static_cast<double>(candidates),
                     -static_cast<double>(from.SubtreeInternalCount(k)));
  }
  return mass;
}

}  // namespace

std::vector<std::uint32_t> TreePairChain::LeafLabels(
    const FittedTree& primary) {
  const auto unassigned =
      static_cast<std::uint32_t>(primary.tree().leaf_count());
  std::vector<std::uint32_t> labels(primary.leaf_of().size());
  for (std::size_t e = 0; e < labels.size(); ++e) {
    const std::int32_t leaf = primary.leaf_of()[e];
    labels[e] = leaf == FittedTree::kUnrouted ? unassigned
                                              : static_cast<std::uint32_t>(leaf);
  }
  return labels;
}

TreePairChain::TreePairChain(const Dataset& data,
                             std::span<const SplitPoint> left_splits,
                             std::span<const SplitPoint> right_splits,
                             Side primary, const TargetVariable& initial,
                             int depth, RandomSource& rng)
    : left_splits_(left_splits),
      right_splits_(right_splits),
      primary_(primary),
      rng_(rng),
      primary_tree_(data.view(primary),
                    RandomSplitTree(primary, depth, candidates(primary), rng),
                    initial),
      secondary_tree_(
          data.view(Opposite(primary)),
          RandomSplitTree(Opposite(primary), depth,
                          candidates(Opposite(primary)), rng),
          LeafLabels(primary_tree_), (std::size_t{1} << depth) + 1) {
  if (depth < 1) throw std::invalid_argument("tree depth must be at least 1");
}

double TreePairChain::score() const {
  return PairScore(primary_tree_.QualityNorm(), secondary_tree_.QualityNorm());
}

TreePair TreePairChain::pair() const {
  return {tree(Side::kLeft).tree(), tree(Side::kRight).tree()};
}

void TreePairChain::RelabelSecondary(
    std::span<const FittedTree::LeafMove> moves, bool forward) {
  const auto unassigned =
      static_cast<std::uint32_t>(primary_tree_.tree().leaf_count());
  for (const FittedTree::LeafMove& move : moves) {
    const std::int32_t leaf = forward ? move.to : move.from;
    secondary_tree_.Relabel(move.entity,
                            leaf == FittedTree::kUnrouted
                                ? unassigned
                                : static_cast<std::uint32_t>(leaf));
  }
}

void TreePairChain::Step(double epsilon) {
  const double old_score = score();
  history_.push_back(old_score);
  const std::size_t internal = primary_tree_.tree().internal_count();
  std::size_t node = rng_.UniformIndex(2 * internal);
  const bool on_primary = node < internal;
  if (!on_primary) node -= internal;
  const Side side = on_primary ? primary_ : Opposite(primary_);
  const std::span<const SplitPoint> splits = candidates(side);
  const SplitPoint& split = splits[rng_.UniformIndex(splits.size())];
  if (on_primary) {
    primary_tree_.ReplaceNode(node, split, splits, rng_);
    const std::vector<FittedTree::LeafMove> moves(
        primary_tree_.last_moves().begin(), primary_tree_.last_moves().end());
    RelabelSecondary(moves, true);
    if (MhAccept(old_score, score(), epsilon, kPairScoreSensitivity, rng_)) {
      ++accepted_;
    } else {
      primary_tree_.UndoReplace();
      RelabelSecondary(moves, false);
    }
  } else {
    secondary_tree_.ReplaceNode(node, split, splits, rng_);
    if (MhAccept(old_score, score(), epsilon, kPairScoreSensitivity, rng_)) {
      ++accepted_;
    } else {
      secondary_tree_.UndoReplace();
    }
  }
}

double ProposalProbability(const TreePair& from, const TreePair& to,
                           std::size_t left_candidates,
                           std::size_t right_candidates) {
  const double nodes = static_cast<double>(from.left.internal_count() +
                                           from.right.internal_count());
  double mass = 0.0;
  if (from.right == to.right) {
    mass += SingleTreeMass(from.left, to.left, left_candidates);
  }
  if (from.left == to.left) {
    mass += SingleTreeMass(from.right, to.right, right_candidates);
  }
  return mass / nodes;
}

TreePair SampleTreePair(const Dataset& data,
                        std::span<const SplitPoint> left_splits,
                        std::span<const SplitPoint> right_splits,
                        Side initial_side, const TargetVariable& initial,
                        int depth, const McmcOptions& options,
                        RandomSource& rng) {
  TreePairChain chain(data, left_splits, right_splits, Opposite(initial_side),
                      initial, depth, rng);
  for (std::size_t i = 0; i < options.max_iterations &&
                          !StabilizedVar(chain.history(), options.window,
                                         options.sigma);
       ++i) {
    chain.Step(options.epsilon);
  }
  return chain.pair();
}

}  // namespace dpr
