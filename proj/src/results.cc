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

#include "dpr/results.h"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "dpr/error.h"
#include "dpr/text.h"

namespace dpr {
namespace {

constexpr std::size_t kColumnCount = 10;

std::string Clean(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return text;
}

double Number(std::string_view text, const char* column, std::size_t row) {
  const std::optional<double> value = ParseNumber(Trim(text));
  if (!value) {
    throw ParseError(std::string("bad ") + column + " '" + std::string(text) +
                         "'",
                     row);
  }
  return *value;
}

std::size_t Index(std::string_view text, const char* column, std::size_t row) {
  const double value = Number(text, column, row);
  if (!(value >= 0.0) || value != static_cast<double>(
                                      static_cast<std::size_t>(value))) {
    throw ParseError(std::string("bad ") + column + " '" + std::string(text) +
                         "'",
                     row);
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

ResultRow ToResultRow(std::size_t id, std::size_t run,
                      const Redescription& red) {
  ResultRow row;
  row.id = id;
  row.run = run;
  row.left = red.left;
  row.right = red.right;
  row.supp_left = red.stats.supp_left;
  row.supp_right = red.stats.supp_right;
  row.supp_inter = red.stats.supp_inter;
  row.jaccard = red.stats.jaccard;
  row.pvalue = red.stats.pvalue;
  row.trace = Clean(red.trace);
  return row;
}

void WriteResults(std::ostream& out, std::span<const ResultRow> rows) {
  out << "# dp-redescribe results\n"
         "# id          row number, unique within the file\n"
         "# run         index of the seeded run that produced the row\n"
         "# query_left  query over the left view\n"
         "# query_right query over the right view\n"
         "# supp_left   noisy support of query_left\n"
         "# supp_right  noisy support of query_right\n"
         "# supp_inter  noisy support of both queries\n"
         "# jaccard     Jaccard index from the noisy supports\n"
         "# pvalue      binomial-tail p-value from the noisy supports\n"
         "# trace       trial that produced the row\n"
      << kResultColumns << '\n';
  for (const ResultRow& row : rows) {
    out << row.id << ',' << row.run << ',' << FormatQuery(row.left) << ','
        << FormatQuery(row.right) << ',' << FormatNumber(row.supp_left) << ','
        << FormatNumber(row.supp_right) << ',' << FormatNumber(row.supp_inter)
        << ',' << FormatNumber(row.jaccard) << ','
        << FormatNumber(row.pvalue) << ',' << Clean(row.trace) << '\n';
  }
}

std::vector<ResultRow> ReadResults(std::istream& in) {
  std::vector<ResultRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line.front() == '#') continue;
    if (!header) {
      if (line != kResultColumns) {
        throw ParseError("expected column header '" +
                             std::string(kResultColumns) + "'",
                         line_no);
      }
      header = true;
      continue;
    }
    const std::vector<std::string_view> cells = SplitOn(line, ',');
    if (cells.size() != kColumnCount) {
      throw ParseError("expected " + std::to_string(kColumnCount) +
                           " columns, found " + std::to_string(cells.size()),
                       line_no);
    }
    ResultRow row;
    row.id = Index(cells[0], "id", line_no);
    row.run = Index(cells[1], "run", line_no);
    try {
      row.left = ParseQuery(cells[2]);
      row.right = ParseQuery(cells[3]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    row.supp_left = Number(cells[4], "supp_left", line_no);
    row.supp_right = Number(cells[5], "supp_right", line_no);
    row.supp_inter = Number(cells[6], "supp_inter", line_no);
    row.jaccard = Number(cells[7], "jaccard", line_no);
    row.pvalue = Number(cells[8], "pvalue", line_no);
    row.trace = std::string(cells[9]);
    rows.push_back(std::move(row));
  }
  if (!header) throw ParseError("missing column header");
  return rows;
}

}  // namespace dpr
