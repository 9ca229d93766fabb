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

// Private single-tree induction, server side. These functions consume
// privacy budget but do not record it; the curator charges before calling.

#ifndef DPR_INDUCTION_H_
#define DPR_INDUCTION_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dpr/data.h"
#include "dpr/fitted_tree.h"
#include "dpr/random.h"
#include "dpr/target.h"
#include "dpr/tree.h"

namespace dpr {

// Gini split quality of every candidate on a subset of entities:
// -sum over the pass and fail children of tau_j (1 - sum_c p_jc^2).
// Entities missing the tested attribute belong to neither child.
class SplitScorer {
 public:
  // `candidates` must be grouped by attribute, as EnumerateSplitPoints
  // returns them. Keeps references to `view` and `candidates`.
  SplitScorer(const View& view, std::span<const SplitPoint> candidates);

  std::vector<double> Score(std::span<const std::uint32_t> entities,
                            std::span<const std::uint32_t> labels,
                            std::size_t class_count) const;

 private:
  struct Group {
    std::size_t attribute;
    std::size_t begin;  // range in candidates_
    std::size_t end;
  };

  const View& view_;
  std::span<const SplitPoint> candidates_;
  std::vector<Group> groups_;
  // Numeric attributes: observed entities in ascending value order.
  std::vector<std::vector<std::uint32_t>> sorted_;
};

// Gini impurity sensitivity used for split selection.
inline constexpr double kGiniSensitivity = 2.0;
// Sensitivity of the g1 tree score.
inline constexpr double kG1Sensitivity = 2.0;

// Top-down: each node's split is drawn by the exponential mechanism over
// all candidates with epsilon / depth, and entities are partitioned by the
// chosen test. Nodes of one level see disjoint data.
DecisionTree BuildExpMechTree(const View& view, Side side,
                              std::span<const SplitPoint> candidates,
                              const TargetVariable& target, int depth,
                              double epsilon, RandomSource& rng);

struct McmcOptions {
  double epsilon = 1.0;
  std::size_t max_iterations = 10000;
  double sigma = 0.005;
  std::size_t window = 500;
};

// Metropolis-Hastings over full trees of a fixed depth with stationary
// distribution proportional to exp(epsilon * g1 / 4).
class TreeChain {
 public:
  TreeChain(const View& view, Side side,
            std::span<const SplitPoint> candidates,
            const TargetVariable& target, int depth, RandomSource& rng);

  // Records the current score, proposes a replacement of a uniformly chosen
  // internal node by a uniformly chosen split, and accepts or reverts.
  void Step(double epsilon);
  double score() const { return state_.QualityG1(); }
  const FittedTree& state() const { return state_; }
  std::span<const double> history() const { return history_; }
  std::size_t accepted() const { return accepted_; }

 private:
  std::span<const SplitPoint> candidates_;
  RandomSource& rng_;
  FittedTree state_;
  std::vector<double> history_;
  std::size_t accepted_ = 0;
};

// Runs a TreeChain until max_iterations or StabilizedVar fires.
DecisionTree SampleMcmcTree(const View& view, Side side,
                            std::span<const SplitPoint> candidates,
                            const TargetVariable& target, int depth,
                            const McmcOptions& options, RandomSource& rng);

}  // namespace dpr

#endif  // DPR_INDUCTION_H_
