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

#include "dpr/evaluation.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "dpr/error.h"
#include "dpr/redescribe.h"
#include "dpr/text.h"

namespace dpr {
namespace {

constexpr std::size_t kEvaluationColumnCount = 12;

std::string Clean(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return text;
}

double Number(std::string_view text, std::size_t row) {
  const std::optional<double> value = ParseNumber(Trim(text));
  if (!value) {
    throw ParseError("bad number '" + std::string(text) + "'", row);
  }
  return *value;
}

}  // namespace

TrueStats ComputeTrueStats(const Dataset& data, const Query& left,
                           const Query& right) {
  const std::vector<bool> sl = BoundQuery(data.left(), left).Support();
  const std::vector<bool> sr = BoundQuery(data.right(), right).Support();
  TrueStats stats;
  for (std::size_t e = 0; e < sl.size(); ++e) {
    stats.supp_left += sl[e];
    stats.supp_right += sr[e];
    stats.supp_inter += sl[e] && sr[e];
  }
  const std::size_t uni = stats.supp_left + stats.supp_right - stats.supp_inter;
  stats.jaccard = uni == 0 ? 0.0
                           : static_cast<double>(stats.supp_inter) /
                                 static_cast<double>(uni);
  const auto n = static_cast<double>(data.entity_count());
  stats.pvalue = n > 0 ? PValue(static_cast<double>(stats.supp_left),
                                static_cast<double>(stats.supp_right),
                                static_cast<double>(stats.supp_inter), n)
                       : 1.0;
  return stats;
}

EvaluationRow EvaluateRow(const Dataset& data, const ResultRow& row) {
  EvaluationRow out;
  out.id = row.id;
  out.query_left = FormatQuery(row.left);
  out.query_right = FormatQuery(row.right);
  out.noisy_jaccard = row.jaccard;
  try {
    const TrueStats stats = ComputeTrueStats(data, row.left, row.right);
    out.true_supp_left = static_cast<double>(stats.supp_left);
    out.true_supp_right = static_cast<double>(stats.supp_right);
    out.true_supp_inter = static_cast<double>(stats.supp_inter);
    out.true_jaccard = stats.jaccard;
    out.true_pvalue = stats.pvalue;
    out.jaccard_gap = std::abs(row.jaccard - stats.jaccard);
    out.significant = stats.pvalue <= kSignificanceLevel;
  } catch (const SchemaError& e) {
    out.error = Clean(e.what());
  }
  return out;
}

std::vector<EvaluationRow> EvaluateResults(const Dataset& data,
                                           std::span<const ResultRow> rows) {
  std::vector<EvaluationRow> out;
  out.reserve(rows.size());
  for (const ResultRow& row : rows) out.push_back(EvaluateRow(data, row));
  return out;
}

void WriteEvaluation(std::ostream& out, std::span<const EvaluationRow> rows) {
  out << kEvaluationColumns << '\n';
  for (const EvaluationRow& r : rows) {
    out << r.id << ',' << r.query_left << ',' << r.query_right << ','
        << FormatNumber(r.noisy_jaccard) << ','
        << FormatNumber(r.true_supp_left) << ','
        << FormatNumber(r.true_supp_right) << ','
        << FormatNumber(r.true_supp_inter) << ','
        << FormatNumber(r.true_jaccard) << ',' << FormatNumber(r.true_pvalue)
        << ',' << FormatNumber(r.jaccard_gap) << ','
        << (r.significant ? "yes" : "no") << ',' << Clean(r.error) << '\n';
  }
}

std::vector<EvaluationRow> ReadEvaluation(std::istream& in) {
  std::vector<EvaluationRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line.front() == '#') continue;
    if (!header) {
      if (line != kEvaluationColumns) {
        throw ParseError("expected column header '" +
                             std::string(kEvaluationColumns) + "'",
                         line_no);
      }
      header = true;
      continue;
    }
    const std::vector<std::string_view> c = SplitOn(line, ',');
    if (c.size() != kEvaluationColumnCount) {
      throw ParseError("expected " + std::to_string(kEvaluationColumnCount) +
                           " columns, found " + std::to_string(c.size()),
                       line_no);
    }
    EvaluationRow r;
    const double id = Number(c[0], line_no);
    if (!(id >= 0.0)) throw ParseError("bad id", line_no);
    r.id = static_cast<std::size_t>(id);
    r.query_left = std::string(c[1]);
    r.query_right = std::string(c[2]);
    r.noisy_jaccard = Number(c[3], line_no);
    r.true_supp_left = Number(c[4], line_no);
    r.true_supp_right = Number(c[5], line_no);
    r.true_supp_inter = Number(c[6], line_no);
    r.true_jaccard = Number(c[7], line_no);
    r.true_pvalue = Number(c[8], line_no);
    r.jaccard_gap = Number(c[9], line_no);
    if (c[10] != "yes" && c[10] != "no") {
      throw ParseError("significant must be yes or no", line_no);
    }
    r.significant = c[10] == "yes";
    r.error = std::string(c[11]);
    rows.push_back(std::move(r));
  }
  if (!header) throw ParseError("missing column header");
  return rows;
}

std::vector<double> AverageRanks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                   std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) {
      ++j;
    }
    const double rank = (static_cast<double>(i + j) / 2.0) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double SpearmanRho(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("rank correlation needs paired samples");
  }
  const std::vector<double> rx = AverageRanks(x);
  const std::vector<double> ry = AverageRanks(y);
  const auto n = static_cast<double>(rx.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return sxy / std::sqrt(sxx * syy);
}

std::array<std::size_t, kHistogramBins> JaccardHistogram(
    std::span<const double> values) {
  std::array<std::size_t, kHistogramBins> bins{};
  for (double v : values) {
    const double clamped = std::clamp(v, 0.0, 1.0);
    auto b = static_cast<std::size_t>(
        std::floor(clamped * static_cast<double>(kHistogramBins)));
    bins[std::min(b, kHistogramBins - 1)] += 1;
  }
  return bins;
}

EvaluationSummary Summarize(std::span<const EvaluationRow> rows) {
  EvaluationSummary summary;
  std::vector<double> noisy;
  std::vector<double> truth;
  std::size_t significant = 0;
  for (const EvaluationRow& r : rows) {
    if (!r.error.empty()) {
      ++summary.errors;
      continue;
    }
    noisy.push_back(r.noisy_jaccard);
    truth.push_back(r.true_jaccard);
    significant += r.significant;
  }
  summary.rows = noisy.size();
  if (summary.rows < kMinimumStatsRows) {
    throw std::invalid_argument(
        "statistics need at least " + std::to_string(kMinimumStatsRows) +
        " evaluated rows, found " + std::to_string(summary.rows));
  }
  summary.spearman = SpearmanRho(noisy, truth);
  summary.percent_significant = 100.0 * static_cast<double>(significant) /
                                static_cast<double>(summary.rows);
  summary.noisy_histogram = JaccardHistogram(noisy);
  summary.true_histogram = JaccardHistogram(truth);
  return summary;
}

void WriteScatter(std::ostream& out, std::span<const EvaluationRow> rows) {
  out << "id,noisy_jaccard,true_jaccard\n";
  for (const EvaluationRow& r : rows) {
    if (!r.error.empty()) continue;
    out << r.id << ',' << FormatNumber(r.noisy_jaccard) << ','
        << FormatNumber(r.true_jaccard) << '\n';
  }
}

void WriteHistogram(std::ostream& out, const EvaluationSummary& summary) {
  out << "bin_low,bin_high,noisy_count,true_count\n";
  for (std::size_t b = 0; b < kHistogramBins; ++b) {
    out << FormatNumber(static_cast<double>(b) / kHistogramBins) << ','
        << FormatNumber(static_cast<double>(b + 1) / kHistogramBins) << ','
        << summary.noisy_histogram[b] << ',' << summary.true_histogram[b]
        << '\n';
  }
}

}  // namespace dpr
