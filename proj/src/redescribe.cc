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

#include "dpr/redescribe.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace dpr {
namespace {

double LogAddExp(double a, double b) {
  if (a == -HUGE_VAL) return b;
  if (b == -HUGE_VAL) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// Terms below the running sum by this many nats no longer change a double.
constexpr double kNegligibleLog = 45.0;

double LogBinomialPmf(double n, double i, double log_p, double log_q) {
  return std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
         std::lgamma(n - i + 1.0) + i * log_p + (n - i) * log_q;
}

// log sum of Binomial(n, p) pmf over i = start, start + step, ... moving
// away from the mode, stopping once terms are negligible.
double LogTailSum(double n, double start, double step, double log_p,
                  double log_q) {
  double log_term = LogBinomialPmf(n, start, log_p, log_q);
  double log_sum = log_term;
  const double log_ratio = log_p - log_q;
  for (double i = start; step > 0 ? i < n : i > 0;) {
    // pmf(i + 1) / pmf(i) = (n - i) / (i + 1) * p / q, and its inverse.
    if (step > 0) {
      log_term += std::log((n - i) / (i + 1.0)) + log_ratio;
      i += 1.0;
    } else {
      log_term += std::log(i / (n - i + 1.0)) - log_ratio;
      i -= 1.0;
    }
    log_sum = LogAddExp(log_sum, log_term);
    if (log_term < log_sum - kNegligibleLog) break;
  }
  return log_sum;
}

struct Side1D {
  std::vector<LeafRef> refs;
  std::vector<std::uint64_t> masks;
};

Side1D Candidates(std::size_t leaves) {
  Side1D out;
  for (std::uint32_t i = 0; i < leaves; ++i) {
    for (bool negated : {false, true}) {
      out.refs.push_back({i, negated});
      out.masks.push_back(LeafMask({i, negated}, leaves));
    }
  }
  return out;
}

double MaskedSum(const std::vector<double>& values, std::uint64_t mask) {
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (mask >> i & 1u) sum += values[i];
  }
  return sum;
}

}  // namespace

NoisyCountTable NoisyCountTable::FromCounts(std::size_t left_leaves,
                                            std::size_t right_leaves,
                                            std::vector<double> inter,
                                            std::vector<double> left) {
  if (inter.size() != left_leaves * right_leaves ||
      left.size() != left_leaves) {
    throw std::invalid_argument("count table has the wrong shape");
  }
  NoisyCountTable table;
  table.left_leaves = left_leaves;
  table.right_leaves = right_leaves;
  table.inter = std::move(inter);
  table.left = std::move(left);
  table.right.assign(right_leaves, 0.0);
  for (std::size_t i = 0; i < left_leaves; ++i) {
    for (std::size_t j = 0; j < right_leaves; ++j) {
      table.right[j] += table.at(i, j);
    }
  }
  for (double v : table.left) table.dsize += v;
  return table;
}

LeafCounts CountLeafTables(const Dataset& data, const DecisionTree& left,
                           const DecisionTree& right) {
  const std::size_t nr = right.leaf_count();
  LeafCounts counts;
  counts.inter.assign(left.leaf_count() * nr, 0.0);
  counts.left.assign(left.leaf_count(), 0.0);
  for (std::size_t e = 0; e < data.entity_count(); ++e) {
    const std::optional<std::size_t> l = left.LeafOf(data.left(), e);
    if (!l) continue;
    counts.left[*l] += 1.0;
    const std::optional<std::size_t> r = right.LeafOf(data.right(), e);
    if (r) counts.inter[*l * nr + *r] += 1.0;
  }
  return counts;
}

std::uint64_t LeafMask(const LeafRef& ref, std::size_t leaf_count) {
  const std::uint64_t all =
      leaf_count >= 64 ? ~std::uint64_t{0}
                       : (std::uint64_t{1} << leaf_count) - 1;
  const std::uint64_t bit = std::uint64_t{1} << ref.leaf;
  return ref.negated ? all & ~bit : bit;
}

std::uint64_t LeafQuery::Mask(std::size_t leaf_count) const {
  std::uint64_t mask = 0;
  for (const LeafRef& ref : clauses) mask |= LeafMask(ref, leaf_count);
  return mask;
}

Support CombinedSupport(const NoisyCountTable& table, std::uint64_t left_mask,
                        std::uint64_t right_mask) {
  Support support;
  support.left = MaskedSum(table.left, left_mask);
  support.right = MaskedSum(table.right, right_mask);
  for (std::size_t i = 0; i < table.left_leaves; ++i) {
    if (!(left_mask >> i & 1u)) continue;
    for (std::size_t j = 0; j < table.right_leaves; ++j) {
      if (right_mask >> j & 1u) support.inter += table.at(i, j);
    }
  }
  return support;
}

JaccardValue Jaccard(double inter, double supp_left, double supp_right) {
  const double clamped = std::max(inter, 0.0);
  const double denominator =
      std::max({supp_left + supp_right - clamped, clamped, kJaccardFloor});
  if (denominator == kJaccardFloor) return {0.0, true};
  return {std::clamp(clamped / denominator, 0.0, 1.0), false};
}

double PValue(double supp_left, double supp_right, double inter,
              double dsize) {
  if (!(dsize > 0.0)) {
    throw std::invalid_argument("p-value needs a positive data size");
  }
  const double p = std::clamp(supp_left / dsize, 0.0, 1.0) *
                   std::clamp(supp_right / dsize, 0.0, 1.0);
  const double n = std::round(dsize);
  const double k = std::ceil(inter);
  if (k <= 0.0) return 1.0;
  if (k > n) return 0.0;
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double mode = std::floor((n + 1.0) * p);
  if (k > mode) {
    return std::clamp(std::exp(LogTailSum(n, k, 1.0, log_p, log_q)), 0.0,
                      1.0);
  }
  // The upper tail holds the mode; take the complement of the lower tail.
  const double lower = std::exp(LogTailSum(n, k - 1.0, -1.0, log_p, log_q));
  return std::clamp(1.0 - lower, 0.0, 1.0);
}

RedescriptionStats Evaluate(const Support& support, double dsize) {
  RedescriptionStats stats;
  stats.supp_left = support.left;
  stats.supp_right = support.right;
  stats.supp_inter = support.inter;
  const JaccardValue j = Jaccard(support.inter, support.left, support.right);
  stats.jaccard = j.value;
  stats.degenerate = j.degenerate;
  stats.pvalue = dsize > 0.0
                     ? PValue(support.left, support.right, support.inter, dsize)
                     : 1.0;
  return stats;
}

bool Sat(const RedescriptionStats& stats, const Constraints& constraints,
         double dsize) {
  return stats.pvalue <= constraints.max_pvalue &&
         stats.jaccard >= constraints.min_jaccard &&
         constraints.min_support <= stats.supp_inter &&
         stats.supp_inter <= constraints.max_support_fraction * dsize;
}

std::string Redescription::Key() const {
  return FormatQuery(left) + "\t" + FormatQuery(right);
}

Query ToQuery(const View& view, const DecisionTree& tree,
              const LeafQuery& leaves) {
  Query query;
  for (const LeafRef& ref : leaves.clauses) {
    Clause clause = LeafClause(view, tree, ref.leaf);
    clause.negated = ref.negated;
    query.clauses.push_back(std::move(clause));
  }
  return query;
}

std::vector<Redescription> ExtractFromTable(const Dataset& data,
                                            const DecisionTree& left,
                                            const DecisionTree& right,
                                            const NoisyCountTable& table,
                                            const Constraints& constraints) {
  const std::size_t nl = table.left_leaves;
  const std::size_t nr = table.right_leaves;
  if (nl != left.leaf_count() || nr != right.leaf_count()) {
    throw std::invalid_argument("count table does not match the trees");
  }
  const double dsize = table.dsize;
  const Side1D cand_left = Candidates(nl);
  const Side1D cand_right = Candidates(nr);
  std::vector<Redescription> out;
  std::set<std::string> seen;
  std::vector<double> row(nl);
  std::vector<double> col(nr);

  for (std::uint32_t i = 0; i < nl; ++i) {
    for (std::uint32_t j = 0; j < nr; ++j) {
      for (int variant = 0; variant < 3; ++variant) {
        LeafQuery ql{{{i, variant == 1}}};
        LeafQuery qr{{{j, variant == 2}}};
        std::uint64_t ml = ql.Mask(nl);
        std::uint64_t mr = qr.Mask(nr);
        RedescriptionStats stats =
            Evaluate(CombinedSupport(table, ml, mr), dsize);

        for (std::size_t round = 0; round < kMaxExtensionRounds; ++round) {
          // Left: intersections against the fixed right-hand leaf set.
          for (std::size_t a = 0; a < nl; ++a) {
            row[a] = 0.0;
            for (std::size_t b = 0; b < nr; ++b) {
              if (mr >> b & 1u) row[a] += table.at(a, b);
            }
          }
          {
            const double supp_r = MaskedSum(table.right, mr);
            std::size_t best = 0;
            double best_j = -1.0;
            Support best_support;
            for (std::size_t c = 0; c < cand_left.masks.size(); ++c) {
              const std::uint64_t m = ml | cand_left.masks[c];
              const Support s{MaskedSum(row, m), MaskedSum(table.left, m),
                              supp_r};
              const double jac = Jaccard(s.inter, s.left, s.right).value;
              if (jac > best_j) {
                best_j = jac;
                best = c;
                best_support = s;
              }
            }
            if (best_j > stats.jaccard) {
              const RedescriptionStats next = Evaluate(best_support, dsize);
              if (Sat(next, constraints, dsize)) {
                ql.clauses.push_back(cand_left.refs[best]);
                ml |= cand_left.masks[best];
                stats = next;
              }
            }
          }
          // Right: intersections against the updated left-hand leaf set.
          for (std::size_t b = 0; b < nr; ++b) {
            col[b] = 0.0;
            for (std::size_t a = 0; a < nl; ++a) {
              if (ml >> a & 1u) col[b] += table.at(a, b);
            }
          }
          {
            const double supp_l = MaskedSum(table.left, ml);
            std::size_t best = 0;
            double best_j = -1.0;
            Support best_support;
            for (std::size_t c = 0; c < cand_right.masks.size(); ++c) {
              const std::uint64_t m = mr | cand_right.masks[c];
              const Support s{MaskedSum(col, m), supp_l,
                              MaskedSum(table.right, m)};
              const double jac = Jaccard(s.inter, s.left, s.right).value;
              if (jac > best_j) {
                best_j = jac;
                best = c;
                best_support = s;
              }
            }
            if (best_j > stats.jaccard) {
              const RedescriptionStats next = Evaluate(best_support, dsize);
              if (Sat(next, constraints, dsize)) {
                qr.clauses.push_back(cand_right.refs[best]);
                mr |= cand_right.masks[best];
                stats = next;
              }
            }
          }
        }

        if (!Sat(stats, constraints, dsize)) continue;
        std::sort(ql.clauses.begin(), ql.clauses.end());
        std::sort(qr.clauses.begin(), qr.clauses.end());
        Redescription red;
        red.left = ToQuery(data.left(), left, ql);
        red.right = ToQuery(data.right(), right, qr);
        red.left_leaves = std::move(ql);
        red.right_leaves = std::move(qr);
        red.stats = stats;
        red.dsize = dsize;
        if (seen.insert(red.Key()).second) out.push_back(std::move(red));
      }
    }
  }
  return out;
}

std::vector<Redescription> Prune(const std::vector<Redescription>& reds,
                                 double min_support) {
  std::vector<Redescription> kept;
  for (const Redescription& red : reds) {
    if (red.stats.supp_inter >= min_support) kept.push_back(red);
  }
  return kept;
}

}  // namespace dpr
