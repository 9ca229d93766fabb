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

#include "dpr/target.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dpr/error.h"

namespace dpr {
namespace {

// Appends the unassigned class when any entity is still marked with
// `pending` and relabels those entities with it.
void ResolveUnassigned(TargetVariable& target, std::uint32_t pending) {
  bool any = false;
  for (std::uint32_t& label : target.labels) {
    if (label == pending) {
      label = static_cast<std::uint32_t>(target.class_count);
      any = true;
    }
  }
  if (any) {
    target.unassigned = static_cast<std::uint32_t>(target.class_count);
    ++target.class_count;
  }
}

constexpr std::uint32_t kPending = 0xffffffffu;

}  // namespace

std::vector<std::size_t> TargetVariable::ClassSizes() const {
  std::vector<std::size_t> sizes(class_count, 0);
  for (std::uint32_t label : labels) ++sizes.at(label);
  return sizes;
}

double Quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of empty sample");
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::size_t FreedmanDiaconisBins(std::span<const double> values) {
  if (values.empty()) return 1;
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double range = sorted.back() - sorted.front();
  const double iqr = Quantile(sorted, 0.75) - Quantile(sorted, 0.25);
  const double n = static_cast<double>(sorted.size());
  const double width = 2.0 * iqr / std::cbrt(n);
  if (!(width > 0.0) || !(range > 0.0)) return 1;
  const double bins = std::ceil(range / width);
  return static_cast<std::size_t>(std::clamp(bins, 1.0, n));
}

TargetVariable MakeInitialTarget(const View& view, std::size_t attribute) {
  const Attribute& attr = view.attribute(attribute);
  const std::span<const double> column = view.column(attribute);
  if (view.ObservedCount(attribute) == 0) {
    throw DegenerateAttributeError("attribute '" + attr.name +
                                   "' has no observed values");
  }
  TargetVariable target;
  target.origin = TargetOrigin::kAttribute;
  target.attribute = attr.name;
  target.labels.assign(column.size(), kPending);
  switch (attr.kind) {
    case AttributeKind::kBoolean:
    case AttributeKind::kCategorical:
      target.class_count =
          attr.kind == AttributeKind::kBoolean ? 2 : attr.categories.size();
      for (std::size_t e = 0; e < column.size(); ++e) {
        if (!View::IsMissing(column[e])) {
          target.labels[e] = static_cast<std::uint32_t>(column[e]);
        }
      }
      break;
    case AttributeKind::kNumeric: {
      std::vector<double> observed;
      for (double v : column) {
        if (!View::IsMissing(v)) observed.push_back(v);
      }
      const std::size_t bins = FreedmanDiaconisBins(observed);
      const auto [lo_it, hi_it] =
          std::minmax_element(observed.begin(), observed.end());
      const double lo = *lo_it;
      const double width = (*hi_it - lo) / static_cast<double>(bins);
      target.class_count = bins;
      for (std::size_t e = 0; e < column.size(); ++e) {
        if (View::IsMissing(column[e])) continue;
        std::size_t bin = 0;
        if (width > 0.0) {
          const double pos = std::floor((column[e] - lo) / width);
          bin = static_cast<std::size_t>(
              std::clamp(pos, 0.0, static_cast<double>(bins - 1)));
        }
        target.labels[e] = static_cast<std::uint32_t>(bin);
      }
      break;
    }
  }
  ResolveUnassigned(target, kPending);
  return target;
}

TargetVariable TargetFromLeaves(const View& view, const DecisionTree& tree) {
  TargetVariable target;
  target.origin = TargetOrigin::kTreeLeaves;
  target.class_count = tree.leaf_count();
  target.labels.resize(view.entity_count());
  for (std::size_t e = 0; e < view.entity_count(); ++e) {
    const std::optional<std::size_t> leaf = tree.LeafOf(view, e);
    target.labels[e] = leaf ? static_cast<std::uint32_t>(*leaf) : kPending;
  }
  ResolveUnassigned(target, kPending);
  return target;
}

}  // namespace dpr
