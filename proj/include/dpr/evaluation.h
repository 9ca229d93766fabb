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

// Non-private evaluation: exact statistics of mined queries computed with
// full data access, and summaries comparing them with the noisy values.
// Nothing here touches a privacy accountant.

#ifndef DPR_EVALUATION_H_
#define DPR_EVALUATION_H_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dpr/data.h"
#include "dpr/results.h"

namespace dpr {

inline constexpr double kSignificanceLevel = 0.01;

struct EvaluationRow {
  std::size_t id = 0;
  std::string query_left;
  std::string query_right;
  double noisy_jaccard = 0.0;
  double true_supp_left = 0.0;
  double true_supp_right = 0.0;
  double true_supp_inter = 0.0;
  double true_jaccard = 0.0;
  double true_pvalue = 1.0;
  double jaccard_gap = 0.0;
  bool significant = false;
  // Non-empty when the queries do not fit the data; other statistics are
  // then meaningless.
  std::string error;

  friend bool operator==(const EvaluationRow&, const EvaluationRow&) = default;
};

struct TrueStats {
  std::size_t supp_left = 0;
  std::size_t supp_right = 0;
  std::size_t supp_inter = 0;
  double jaccard = 0.0;  // 0 when both supports are empty
  double pvalue = 1.0;   // over all entities
};

// Throws SchemaError if a query does not fit its view.
TrueStats ComputeTrueStats(const Dataset& data, const Query& left,
                           const Query& right);
EvaluationRow EvaluateRow(const Dataset& data, const ResultRow& row);
std::vector<EvaluationRow> EvaluateResults(const Dataset& data,
                                           std::span<const ResultRow> rows);

inline constexpr const char* kEvaluationColumns =
    "id,query_left,query_right,noisy_jaccard,true_supp_left,true_supp_right,"
    "true_supp_inter,true_jaccard,true_pvalue,jaccard_gap,significant,error";

void WriteEvaluation(std::ostream& out, std::span<const EvaluationRow> rows);
std::vector<EvaluationRow> ReadEvaluation(std::istream& in);

// Ranks starting at 1; tied values share the mean of their ranks.
std::vector<double> AverageRanks(std::span<const double> values);
// Pearson correlation of average ranks. NaN when either side is constant.
double SpearmanRho(std::span<const double> x, std::span<const double> y);

inline constexpr std::size_t kHistogramBins = 10;
// Bin b counts values in [b / 10, (b + 1) / 10); 1.0 joins the last bin and
// values outside [0, 1] are clamped.
std::array<std::size_t, kHistogramBins> JaccardHistogram(
    std::span<const double> values);

struct EvaluationSummary {
  std::size_t rows = 0;     // rows without an error
  std::size_t errors = 0;
  double spearman = 0.0;
  double percent_significant = 0.0;
  std::array<std::size_t, kHistogramBins> noisy_histogram{};
  std::array<std::size_t, kHistogramBins> true_histogram{};
};

inline constexpr std::size_t kMinimumStatsRows = 3;
// Throws std::invalid_argument with fewer than kMinimumStatsRows usable rows.
EvaluationSummary Summarize(std::span<const EvaluationRow> rows);

void WriteScatter(std::ostream& out, std::span<const EvaluationRow> rows);
void WriteHistogram(std::ostream& out, const EvaluationSummary& summary);

}  // namespace dpr

#endif  // DPR_EVALUATION_H_
