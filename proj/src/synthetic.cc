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

#include "dpr/synthetic.h"

#include <string>
#include <utility>
#include <vector>

#include "dpr/random.h"

namespace dpr {
namespace {

View MakeView(const PlantedSpec& spec,
              const std::vector<std::vector<double>>& latent,
              const std::string& prefix, RandomSource& rng) {
  std::vector<Attribute> attributes;
  std::vector<std::vector<double>> columns;
  auto cell = [&](double value) {
    return rng.Uniform() < spec.missing ? View::Missing() : value;
  };
  for (std::size_t k = 0; k < spec.planted; ++k) {
    attributes.push_back({prefix + "p" + std::to_string(k),
                          AttributeKind::kBoolean, {}});
    std::vector<double> column(spec.entities);
    for (std::size_t e = 0; e < spec.entities; ++e) {
      const bool flip = rng.Uniform() < spec.flip;
      column[e] = flip ? 1.0 - latent[k][e] : latent[k][e];
    }
    columns.push_back(std::move(column));
  }
  for (std::size_t k = 0; k < spec.noise_booleans; ++k) {
    attributes.push_back({prefix + "b" + std::to_string(k),
                          AttributeKind::kBoolean, {}});
    std::vector<double> column(spec.entities);
    for (double& v : column) v = cell(rng.Uniform() < 0.5 ? 1.0 : 0.0);
    columns.push_back(std::move(column));
  }
  for (std::size_t k = 0; k < spec.numerics; ++k) {
    attributes.push_back({prefix + "x" + std::to_string(k),
                          AttributeKind::kNumeric, {}});
    std::vector<double> column(spec.entities);
    for (double& v : column) {
      v = cell(static_cast<double>(rng.UniformIndex(spec.numeric_levels)));
    }
    columns.push_back(std::move(column));
  }
  for (std::size_t k = 0; k < spec.categoricals; ++k) {
    attributes.push_back({prefix + "c" + std::to_string(k),
                          AttributeKind::kCategorical,
                          {"red", "green", "blue"}});
    std::vector<double> column(spec.entities);
    for (double& v : column) v = cell(static_cast<double>(rng.UniformIndex(3)));
    columns.push_back(std::move(column));
  }
  return View(std::move(attributes), std::move(columns));
}

}  // namespace

Dataset MakePlantedDataset(const PlantedSpec& spec) {
  RandomSource rng(spec.seed, 0);
  std::vector<std::vector<double>> latent(spec.planted,
                                          std::vector<double>(spec.entities));
  for (auto& column : latent) {
    for (double& v : column) v = rng.Uniform() < 0.5 ? 1.0 : 0.0;
  }
  View left = MakeView(spec, latent, "l_", rng);
  View right = MakeView(spec, latent, "r_", rng);
  return Dataset(std::move(left), std::move(right));
}

}  // namespace dpr
