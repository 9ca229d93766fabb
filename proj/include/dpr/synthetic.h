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

// Synthetic two-view data with planted cross-view correspondences.

#ifndef DPR_SYNTHETIC_H_
#define DPR_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>

#include "dpr/data.h"

namespace dpr {

// Attribute p<k> of each view copies a shared latent fair bit, flipped
// independently per view with probability `flip`. The remaining attributes
// are independent noise: booleans b<k>, integer-valued numerics x<k> with
// `numeric_levels` levels, and three-category attributes c<k>. Names carry
// an "l_" or "r_" prefix. Every non-latent cell is missing with probability
// `missing`.
struct PlantedSpec {
  std::size_t entities = 5000;
  std::size_t planted = 3;
  double flip = 0.02;
  std::size_t noise_booleans = 1;
  std::size_t numerics = 1;
  std::size_t numeric_levels = 5;
  std::size_t categoricals = 0;
  double missing = 0.0;
  std::uint64_t seed = 1;
};

Dataset MakePlantedDataset(const PlantedSpec& spec);

}  // namespace dpr

#endif  // DPR_SYNTHETIC_H_
