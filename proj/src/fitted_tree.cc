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

#include "dpr/fitted_tree.h"

#include <stdexcept>

namespace dpr {
namespace {

int HeapLevel(std::size_t node) {
  int level = 0;
  for (std::size_t n = node + 1; n > 1; n >>= 1) ++level;
  return level;
}

// Absolute id of the node at relative `level` and position `j` below `root`.
std::size_t Descendant(std::size_t root, int level, std::size_t j) {
  return ((root + 1) << level) - 1 + j;
}

}  // namespace

FittedTree::FittedTree(const View& view, DecisionTree tree,
                       std::vector<std::uint32_t> labels,
                       std::size_t class_count)
    : view_(&view),
      tree_(std::move(tree)),
      labels_(std::move(labels)),
      class_count_(class_count) {
  if (labels_.size() != view.entity_count()) {
    throw std::invalid_argument("target does not cover the view's entities");
  }
  for (std::uint32_t label : labels_) {
    if (label >= class_count_) {
      throw std::invalid_argument("target label out of range");
    }
  }
  const std::size_t nodes = tree_.internal_count() + tree_.leaf_count();
  members_.resize(nodes);
  members_[0].resize(labels_.size());
  for (std::size_t e = 0; e < labels_.size(); ++e) {
    members_[0][e] = static_cast<std::uint32_t>(e);
  }
  leaf_of_.assign(labels_.size(), kUnrouted);
  counts_.assign(tree_.leaf_count() * class_count_, 0);
  leaf_size_.assign(tree_.leaf_count(), 0);
  leaf_sumsq_.assign(tree_.leaf_count(), 0);
  Route(0);
  for (std::size_t e = 0; e < labels_.size(); ++e) {
    AddToLeaf(leaf_of_[e], labels_[e]);
  }
}

FittedTree::FittedTree(const View& view, DecisionTree tree,
                       const TargetVariable& target)
    : FittedTree(view, std::move(tree), target.labels, target.class_count) {}

std::size_t FittedTree::routed_count() const {
  std::size_t total = 0;
  for (std::uint64_t size : leaf_size_) total += size;
  return total;
}

double FittedTree::QualityG1() const {
  double g = 0.0;
  for (std::size_t l = 0; l < leaf_size_.size(); ++l) {
    if (leaf_size_[l] == 0) continue;
    const double n = static_cast<double>(leaf_size_[l]);
    g -= n - static_cast<double>(leaf_sumsq_[l]) / n;
  }
  return g;
}

double FittedTree::QualityNorm() const {
  if (labels_.empty()) return 0.0;
  double q = 0.0;
  for (std::size_t l = 0; l < leaf_size_.size(); ++l) {
    if (leaf_size_[l] == 0) continue;
    q += static_cast<double>(leaf_sumsq_[l]) /
         static_cast<double>(leaf_size_[l]);
  }
  return q / static_cast<double>(labels_.size());
}

void FittedTree::AddToLeaf(std::int32_t leaf, std::uint32_t label) {
  if (leaf == kUnrouted) return;
  const std::size_t l = static_cast<std::size_t>(leaf);
  std::uint32_t& count = counts_[l * class_count_ + label];
  leaf_sumsq_[l] += 2 * static_cast<std::uint64_t>(count) + 1;
  ++count;
  ++leaf_size_[l];
}

void FittedTree::RemoveFromLeaf(std::int32_t leaf, std::uint32_t label) {
  if (leaf == kUnrouted) return;
  const std::size_t l = static_cast<std::size_t>(leaf);
  std::uint32_t& count = counts_[l * class_count_ + label];
  leaf_sumsq_[l] -= 2 * static_cast<std::uint64_t>(count) - 1;
  --count;
  --leaf_size_[l];
}

void FittedTree::Route(std::size_t node) {
  if (tree_.IsLeafNode(node)) {
    const auto leaf = static_cast<std::int32_t>(tree_.LeafIndex(node));
    for (std::uint32_t e : members_[node]) leaf_of_[e] = leaf;
    return;
  }
  const std::size_t pass = DecisionTree::PassChild(node);
  const std::size_t fail = DecisionTree::FailChild(node);
  members_[pass].clear();
  members_[fail].clear();
  const SplitPoint& split = tree_.split(node);
  const std::span<const double> column = view_->column(split.attribute);
  for (std::uint32_t e : members_[node]) {
    switch (RouteValue(split, column[e])) {
      case Route::kPass:
        members_[pass].push_back(e);
        break;
      case Route::kFail:
        members_[fail].push_back(e);
        break;
      case Route::kMissing:
        leaf_of_[e] = kUnrouted;
        break;
    }
  }
  Route(pass);
  Route(fail);
}

void FittedTree::ReplaceNode(std::size_t node, const SplitPoint& split,
                             std::span<const SplitPoint> candidates,
                             RandomSource& rng) {
  if (tree_.IsLeafNode(node)) {
    throw std::out_of_range("replaced node must be internal");
  }
  std::vector<SplitPoint> subtree(tree_.SubtreeInternalCount(node));
  subtree[0] = split;
  if (subtree.size() > 1 && candidates.empty()) {
    throw std::invalid_argument("view has no split points");
  }
  for (std::size_t i = 1; i < subtree.size(); ++i) {
    subtree[i] = candidates[rng.UniformIndex(candidates.size())];
  }
  ReplaceSubtree(node, subtree);
}

void FittedTree::ReplaceSubtree(std::size_t node,
                                std::span<const SplitPoint> subtree) {
  if (tree_.IsLeafNode(node)) {
    throw std::out_of_range("replaced node must be internal");
  }
  if (subtree.size() != tree_.SubtreeInternalCount(node)) {
    throw std::invalid_argument("subtree has the wrong number of splits");
  }
  const int levels = tree_.depth() - HeapLevel(node);
  undo_node_ = node;
  has_undo_ = true;
  undo_splits_.clear();
  std::size_t i = 0;
  for (int r = 0; r < levels; ++r) {
    for (std::size_t j = 0; j < (std::size_t{1} << r); ++j, ++i) {
      const std::size_t id = Descendant(node, r, j);
      undo_splits_.push_back(tree_.split(id));
      tree_.set_split(id, subtree[i]);
    }
  }
  undo_members_.clear();
  for (int r = 1; r <= levels; ++r) {
    for (std::size_t j = 0; j < (std::size_t{1} << r); ++j) {
      undo_members_.push_back(std::move(members_[Descendant(node, r, j)]));
      members_[Descendant(node, r, j)].clear();
    }
  }
  moves_.clear();
  const std::vector<std::uint32_t>& entities = members_[node];
  std::vector<std::int32_t> before(entities.size());
  for (std::size_t k = 0; k < entities.size(); ++k) {
    before[k] = leaf_of_[entities[k]];
  }
  Route(node);
  for (std::size_t k = 0; k < entities.size(); ++k) {
    const std::uint32_t e = entities[k];
    if (before[k] == leaf_of_[e]) continue;
    moves_.push_back({e, before[k], leaf_of_[e]});
    RemoveFromLeaf(before[k], labels_[e]);
    AddToLeaf(leaf_of_[e], labels_[e]);
  }
}

void FittedTree::UndoReplace() {
  if (!has_undo_) throw std::logic_error("nothing to undo");
  has_undo_ = false;
  for (const LeafMove& move : moves_) {
    RemoveFromLeaf(move.to, labels_[move.entity]);
    AddToLeaf(move.from, labels_[move.entity]);
    leaf_of_[move.entity] = move.from;
  }
  moves_.clear();
  const int levels = tree_.depth() - HeapLevel(undo_node_);
  std::size_t i = 0;
  for (int r = 0; r < levels; ++r) {
    for (std::size_t j = 0; j < (std::size_t{1} << r); ++j, ++i) {
      tree_.set_split(Descendant(undo_node_, r, j), undo_splits_[i]);
    }
  }
  i = 0;
  for (int r = 1; r <= levels; ++r) {
    for (std::size_t j = 0; j < (std::size_t{1} << r); ++j, ++i) {
      members_[Descendant(undo_node_, r, j)] = std::move(undo_members_[i]);
    }
  }
}

void FittedTree::Relabel(std::size_t entity, std::uint32_t label) {
  if (label >= class_count_) throw std::out_of_range("label out of range");
  const std::uint32_t old = labels_.at(entity);
  if (old == label) return;
  RemoveFromLeaf(leaf_of_[entity], old);
  labels_[entity] = label;
  AddToLeaf(leaf_of_[entity], label);
}

}  // namespace dpr
