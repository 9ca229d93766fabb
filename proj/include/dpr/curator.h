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

// The trusted curator: the only object that reads the dataset during a
// mining run. What it hands back is either private output (trees, noisy
// counts) charged to its accountant, or an opaque handle to server-side
// state.

#ifndef DPR_CURATOR_H_
#define DPR_CURATOR_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "dpr/data.h"
#include "dpr/induction.h"
#include "dpr/privacy.h"
#include "dpr/random.h"
#include "dpr/redescribe.h"
#include "dpr/target.h"
#include "dpr/tree.h"
#include "dpr/treepair.h"

namespace dpr {

struct AttributeRef {
  Side side = Side::kLeft;
  std::size_t index = 0;

  friend bool operator==(const AttributeRef&, const AttributeRef&) = default;
};

// A target variable kept on the server. Only the side it was derived from
// is visible.
class TargetHandle {
 public:
  Side side() const { return side_; }

 private:
  friend class Curator;
  TargetHandle(std::shared_ptr<const TargetVariable> target, Side side)
      : target_(std::move(target)), side_(side) {}

  std::shared_ptr<const TargetVariable> target_;
  Side side_;
};

class Curator {
 public:
  Curator(const Dataset& data, double budget, std::uint64_t seed,
          std::uint64_t stream = 0, NoiseMode mode = NoiseMode::kLaplace);

  bool is_private() const { return mode_ == NoiseMode::kLaplace; }
  NoiseMode noise_mode() const { return mode_; }
  const BudgetAccountant& accountant() const { return accountant_; }
  // Split-point count of a view; part of the public schema.
  std::size_t split_count(Side side) const {
    return splits(side).size();
  }

  // Initial target from a uniformly drawn attribute of either view. Draws
  // are without replacement until every attribute with an observed value
  // has been used, then the pool refills.
  TargetHandle DrawInitialTarget();
  TargetHandle InitialTarget(const AttributeRef& attribute);
  TargetHandle TargetFromTree(const DecisionTree& tree);

  // Each charges exactly `epsilon` before touching the data and throws
  // BudgetExceededError if that is not available.
  DecisionTree BuildTreeExpMech(Side side, const TargetHandle& target,
                                int depth, double epsilon);
  DecisionTree BuildTreeMcmc(Side side, const TargetHandle& target, int depth,
                             const McmcOptions& options);
  // `initial` must come from an attribute; the primary tree is built on the
  // opposite view.
  TreePair SampleTreePair(const TargetHandle& initial, int depth,
                          const McmcOptions& options);
  // Two parallel charges of epsilon / 2: intersection cells, then left
  // leaves. Each cell receives Laplace(2 / epsilon) noise.
  NoisyCountTable NoisyLeafTables(const DecisionTree& left,
                                  const DecisionTree& right, double epsilon);
  std::vector<Redescription> ExtractReds(const DecisionTree& left,
                                         const DecisionTree& right,
                                         double epsilon,
                                         const Constraints& constraints);

 private:
  const std::vector<SplitPoint>& splits(Side side) const {
    return side == Side::kLeft ? left_splits_ : right_splits_;
  }
  void CheckAvailable(double epsilon) const;

  const Dataset& data_;
  BudgetAccountant accountant_;
  RandomSource rng_;
  NoiseMode mode_;
  std::vector<SplitPoint> left_splits_;
  std::vector<SplitPoint> right_splits_;
  std::vector<AttributeRef> pool_;
  std::size_t pool_next_ = 0;
};

}  // namespace dpr

#endif  // DPR_CURATOR_H_
