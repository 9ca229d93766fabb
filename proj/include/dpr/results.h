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

// Result files: one row per redescription, comma-separated, preceded by a
// '#' comment block that documents the columns.

#ifndef DPR_RESULTS_H_
#define DPR_RESULTS_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dpr/query.h"
#include "dpr/redescribe.h"

namespace dpr {

struct ResultRow {
  std::size_t id = 0;
  std::size_t run = 0;
  Query left;
  Query right;
  double supp_left = 0.0;
  double supp_right = 0.0;
  double supp_inter = 0.0;
  double jaccard = 0.0;
  double pvalue = 1.0;
  std::string trace;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

ResultRow ToResultRow(std::size_t id, std::size_t run,
                      const Redescription& red);

inline constexpr const char* kResultColumns =
    "id,run,query_left,query_right,supp_left,supp_right,supp_inter,jaccard,"
    "pvalue,trace";

void WriteResults(std::ostream& out, std::span<const ResultRow> rows);
// Throws ParseError with the offending line number.
std::vector<ResultRow> ReadResults(std::istream& in);

}  // namespace dpr

#endif  // DPR_RESULTS_H_
