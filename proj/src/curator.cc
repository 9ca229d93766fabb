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

#include "dpr/curator.h"

#include <stdexcept>
#include <string>

#include "dpr/error.h"
#include "dpr/text.h"

namespace dpr {

Curator::Curator(const Dataset& data, double budget, std::uint64_t seed,
                 std::uint64_t stream, NoiseMode mode)
    : data_(data),
      accountant_(budget),
      rng_(seed, stream),
      mode_(mode),
      left_splits_(EnumerateSplitPoints(data.left(), Side::kLeft)),
      right_splits_(EnumerateSplitPoints(data.right(), Side::kRight)) {}

void Curator::CheckAvailable(double epsilon) const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (epsilon > accountant_.remaining() + BudgetAccountant::kTolerance) {
    throw BudgetExceededError("request of " + FormatNumber(epsilon) +
                              " exceeds remaining " +
                              FormatNumber(accountant_.remaining()));
  }
}

TargetHandle Curator::DrawInitialTarget() {
  if (pool_next_ == pool_.size()) {
    pool_.clear();
    for (Side side : {Side::kLeft, Side::kRight}) {
      const View& view = data_.view(side);
      for (std::size_t a = 0; a < view.attribute_count(); ++a) {
        if (view.ObservedCount(a) > 0) pool_.push_back({side, a});
      }
    }
    if (pool_.empty()) {
      throw DegenerateAttributeError("no attribute has an observed value");
    }
    rng_.Shuffle(std::span<AttributeRef>(pool_));
    pool_next_ = 0;
  }
  return InitialTarget(pool_[pool_next_++]);
}

TargetHandle Curator::InitialTarget(const AttributeRef& attribute) {
  auto target = std::make_shared<const TargetVariable>(
      MakeInitialTarget(data_.view(attribute.side), attribute.index));
  return TargetHandle(std::move(target), attribute.side);
}

TargetHandle Curator::TargetFromTree(const DecisionTree& tree) {
  auto target = std::make_shared<const TargetVariable>(
      TargetFromLeaves(data_.view(tree.side()), tree));
  return TargetHandle(std::move(target), tree.side());
}

DecisionTree Curator::BuildTreeExpMech(Side side, const TargetHandle& target,
                                       int depth, double epsilon) {
  if (depth < 1) throw std::invalid_argument("tree depth must be at least 1");
  CheckAvailable(epsilon);
  for (int l = 0; l < depth; ++l) {
    accountant_.ChargeParallel("expmech tree level " + std::to_string(l),
                               epsilon / depth, std::size_t{1} << l);
  }
  return BuildExpMechTree(data_.view(side), side, splits(side),
                          *target.target_, depth, epsilon, rng_);
}

DecisionTree Curator::BuildTreeMcmc(Side side, const TargetHandle& target,
                                    int depth, const McmcOptions& options) {
  CheckAvailable(options.epsilon);
  accountant_.Charge("mcmc tree", options.epsilon);
  return SampleMcmcTree(data_.view(side), side, splits(side), *target.target_,
                        depth, options, rng_);
}

TreePair Curator::SampleTreePair(const TargetHandle& initial, int depth,
                                 const McmcOptions& options) {
  if (initial.target_->origin != TargetOrigin::kAttribute) {
    throw std::invalid_argument("tree pairs start from an attribute target");
  }
  CheckAvailable(options.epsilon);
  accountant_.Charge("tree pair", options.epsilon);
  return dpr::SampleTreePair(data_, left_splits_, right_splits_, initial.side(),
                             *initial.target_, depth, options, rng_);
}

NoisyCountTable Curator::NoisyLeafTables(const DecisionTree& left,
                                         const DecisionTree& right,
                                         double epsilon) {
  if (left.side() != Side::kLeft || right.side() != Side::kRight) {
    throw std::invalid_argument("tree sides do not match the views");
  }
  CheckAvailable(epsilon);
  const double half = epsilon / 2.0;
  LeafCounts counts = CountLeafTables(data_, left, right);
  accountant_.ChargeParallel("leaf intersections", half, counts.inter.size());
  for (double& cell : counts.inter) cell = NoisyCount(cell, half, rng_, mode_);
  accountant_.ChargeParallel("left leaf sizes", half, counts.left.size());
  for (double& cell : counts.left) cell = NoisyCount(cell, half, rng_, mode_);
  return NoisyCountTable::FromCounts(left.leaf_count(), right.leaf_count(),
                                     std::move(counts.inter),
                                     std::move(counts.left));
}

std::vector<Redescription> Curator::ExtractReds(const DecisionTree& left,
                                                const DecisionTree& right,
                                                double epsilon,
                                                const Constraints& constraints) {
  const NoisyCountTable table = NoisyLeafTables(left, right, epsilon);
  return ExtractFromTable(data_, left, right, table, constraints);
}

}  // namespace dpr
