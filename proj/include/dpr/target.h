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

#ifndef DPR_TARGET_H_
#define DPR_TARGET_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpr/data.h"
#include "dpr/tree.h"

namespace dpr {

enum class TargetOrigin { kAttribute, kTreeLeaves };

// Class labels over all entities of the dataset. Entities that cannot be
// labeled (missing attribute value, missing split value) share the
// `unassigned` class, which is present only when some entity needs it and
// is then the last class.
struct TargetVariable {
  std::vector<std::uint32_t> labels;
  std::size_t class_count = 0;
  TargetOrigin origin = TargetOrigin::kAttribute;
  std::string attribute;  // kAttribute only
  std::optional<std::uint32_t> unassigned;

  std::vector<std::size_t> ClassSizes() const;
};

// Booleans get classes {false, true}, categoricals one class per declared
// category, numerics equal-width bins over the observed range with the bin
// count from the Freedman-Diaconis rule. Throws DegenerateAttributeError if
// the attribute has no observed value.
TargetVariable MakeInitialTarget(const View& view, std::size_t attribute);

// One class per leaf, labeled by leaf index.
TargetVariable TargetFromLeaves(const View& view, const DecisionTree& tree);

// Linear interpolation between order statistics at position p * (n - 1).
// `sorted` must be ascending and nonempty.
double Quantile(std::span<const double> sorted, double p);

// ceil(range / (2 * IQR * n^(-1/3))), at least 1 and at most n. A zero IQR
// or zero range yields one bin. `values` need not be sorted; no NaNs.
std::size_t FreedmanDiaconisBins(std::span<const double> values);

}  // namespace dpr

#endif  // DPR_TARGET_H_
