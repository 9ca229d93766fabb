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

// Redescriptions from a pair of trees. Everything here except
// CountLeafTables works on noisy leaf counts only and is client-side
// post-processing.

#ifndef DPR_REDESCRIBE_H_
#define DPR_REDESCRIBE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dpr/data.h"
#include "dpr/query.h"
#include "dpr/tree.h"

namespace dpr {

// Noisy leaf cardinalities of a tree pair. `inter` is row-major with one row
// per left leaf. `right` and `dsize` are derived from the noisy values.
struct NoisyCountTable {
  std::size_t left_leaves = 0;
  std::size_t right_leaves = 0;
  std::vector<double> inter;
  std::vector<double> left;
  std::vector<double> right;
  double dsize = 0.0;

  double at(std::size_t i, std::size_t j) const {
    return inter[i * right_leaves + j];
  }

  // Fills `right` with column sums of `inter` and `dsize` with the sum of
  // `left`.
  static NoisyCountTable FromCounts(std::size_t left_leaves,
                                    std::size_t right_leaves,
                                    std::vector<double> inter,
                                    std::vector<double> left);
};

// Exact leaf counts (server side). Entities a tree cannot route count in no
// cell of that tree.
struct LeafCounts {
  std::vector<double> inter;  // left_leaves x right_leaves
  std::vector<double> left;
};
LeafCounts CountLeafTables(const Dataset& data, const DecisionTree& left,
                           const DecisionTree& right);

// One clause of a tree-derived query: a leaf, or the negation of a leaf
// counted as the union of all other leaves.
struct LeafRef {
  std::uint32_t leaf = 0;
  bool negated = false;

  friend bool operator==(const LeafRef&, const LeafRef&) = default;
  friend auto operator<=>(const LeafRef&, const LeafRef&) = default;
};

struct LeafQuery {
  std::vector<LeafRef> clauses;

  // Leaves whose noisy counts make up the query's support.
  std::uint64_t Mask(std::size_t leaf_count) const;
};

std::uint64_t LeafMask(const LeafRef& ref, std::size_t leaf_count);

struct Support {
  double inter = 0.0;
  double left = 0.0;
  double right = 0.0;
};

// Sums of raw noisy cells over the leaf sets.
Support CombinedSupport(const NoisyCountTable& table, std::uint64_t left_mask,
                        std::uint64_t right_mask);

struct JaccardValue {
  double value = 0.0;
  bool degenerate = false;
};

// inter is clamped at 0; the denominator is
// max(supp_left + supp_right - inter, inter, kJaccardFloor).
inline constexpr double kJaccardFloor = 1e-9;
JaccardValue Jaccard(double inter, double supp_left, double supp_right);

// P[X >= ceil(inter)] for X ~ Binomial(round(dsize), p_left * p_right) with
// p_x = clamp(supp_x / dsize, 0, 1). Throws std::invalid_argument unless
// dsize > 0.
double PValue(double supp_left, double supp_right, double inter,
              double dsize);

struct Constraints {
  double max_pvalue = 0.01;
  double min_jaccard = 0.1;
  double min_support = 10.0;
  double max_support_fraction = 0.8;
};

struct RedescriptionStats {
  double supp_left = 0.0;
  double supp_right = 0.0;
  double supp_inter = 0.0;
  double jaccard = 0.0;
  double pvalue = 1.0;
  bool degenerate = false;
};

RedescriptionStats Evaluate(const Support& support, double dsize);

// pvalue <= max_pvalue, jaccard >= min_jaccard, and
// min_support <= supp_inter <= max_support_fraction * dsize.
bool Sat(const RedescriptionStats& stats, const Constraints& constraints,
         double dsize);

struct Redescription {
  Query left;
  Query right;
  LeafQuery left_leaves;
  LeafQuery right_leaves;
  RedescriptionStats stats;
  double dsize = 0.0;
  std::string trace;

  std::string Key() const;  // "left\tright" query text
};

Query ToQuery(const View& view, const DecisionTree& tree,
              const LeafQuery& leaves);

inline constexpr std::size_t kMaxExtensionRounds = 3;

// Simple pairs over all leaf pairs (plain, left negated, right negated),
// each grown by up to kMaxExtensionRounds greedy disjunctive rounds (left
// then right). A round keeps the best single-clause addition only if it
// raises Jaccard strictly and still satisfies the constraints. Returns the
// distinct results that satisfy the constraints.
std::vector<Redescription> ExtractFromTable(const Dataset& data,
                                            const DecisionTree& left,
                                            const DecisionTree& right,
                                            const NoisyCountTable& table,
                                            const Constraints& constraints);

// Keeps redescriptions with supp_inter >= min_support.
std::vector<Redescription> Prune(const std::vector<Redescription>& reds,
                                 double min_support);

}  // namespace dpr

#endif  // DPR_REDESCRIBE_H_
