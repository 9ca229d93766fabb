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

#include "test_support.h"

#include <cmath>
#include <utility>

namespace dpr::testing {

View RandomView(RandomSource& rng, const std::string& prefix,
                const RandomDataSpec& spec) {
  std::vector<Attribute> attributes;
  std::vector<std::vector<double>> columns;
  for (std::size_t a = 0; a < spec.attributes; ++a) {
    Attribute attr;
    attr.name = prefix + std::to_string(a);
    attr.kind = static_cast<AttributeKind>(rng.UniformIndex(3));
    std::size_t levels = 2;
    if (attr.kind == AttributeKind::kCategorical) {
      levels = 2 + rng.UniformIndex(2);
      for (std::size_t c = 0; c < levels; ++c) {
        attr.categories.push_back("v" + std::to_string(c));
      }
    } else if (attr.kind == AttributeKind::kNumeric) {
      levels = 2 + rng.UniformIndex(spec.max_levels - 1);
    }
    std::vector<double> column(spec.entities);
    for (double& v : column) {
      if (rng.Uniform() < spec.missing) {
        v = View::Missing();
      } else if (attr.kind == AttributeKind::kNumeric) {
        v = 0.5 * static_cast<double>(rng.UniformIndex(levels)) - 1.0;
      } else {
        v = static_cast<double>(rng.UniformIndex(levels));
      }
    }
    attributes.push_back(std::move(attr));
    columns.push_back(std::move(column));
  }
  return View(std::move(attributes), std::move(columns));
}

Dataset RandomDataset(RandomSource& rng, const RandomDataSpec& spec) {
  View left = RandomView(rng, "l", spec);
  View right = RandomView(rng, "r", spec);
  return Dataset(std::move(left), std::move(right));
}

int BruteLeaf(const View& view, const DecisionTree& tree, std::size_t entity) {
  const std::vector<SplitPoint> splits(tree.splits().begin(),
                                       tree.splits().end());
  std::size_t node = 0;
  while (node < splits.size()) {
    const SplitPoint& s = splits[node];
    const double v = view.column(s.attribute)[entity];
    if (std::isnan(v)) return -1;
    bool pass = false;
    if (s.kind == SplitKind::kBooleanTrue) pass = v == 1.0;
    if (s.kind == SplitKind::kCategoryEquals) {
      pass = static_cast<std::size_t>(v) == s.category;
    }
    if (s.kind == SplitKind::kNumericAtMost) pass = !(v > s.threshold);
    node = pass ? 2 * node + 1 : 2 * node + 2;
  }
  return static_cast<int>(node - splits.size());
}

std::vector<std::vector<double>> BruteLeafClassTable(
    const View& view, const DecisionTree& tree,
    const std::vector<std::uint32_t>& labels, std::size_t class_count) {
  std::vector<std::vector<double>> table(
      tree.leaf_count(), std::vector<double>(class_count, 0.0));
  for (std::size_t e = 0; e < view.entity_count(); ++e) {
    const int leaf = BruteLeaf(view, tree, e);
    if (leaf >= 0) table[leaf][labels[e]] += 1.0;
  }
  return table;
}

double BruteG1(const std::vector<std::vector<double>>& table) {
  double total = 0.0;
  for (const auto& row : table) {
    double n = 0.0;
    double sq = 0.0;
    for (double c : row) {
      n += c;
      sq += c * c;
    }
    if (n > 0.0) total -= n - sq / n;
  }
  return total;
}

double BruteQualityNorm(const std::vector<std::vector<double>>& table,
                        double total) {
  double q = 0.0;
  for (const auto& row : table) {
    double n = 0.0;
    double sq = 0.0;
    for (double c : row) {
      n += c;
      sq += c * c;
    }
    if (n > 0.0) q += sq / n;
  }
  return q / total;
}

std::size_t Count(const std::vector<bool>& set) {
  std::size_t n = 0;
  for (bool b : set) n += b;
  return n;
}

std::vector<bool> Intersect(const std::vector<bool>& a,
                            const std::vector<bool>& b) {
  std::vector<bool> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

}  // namespace dpr::testing
