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

// Writes a planted two-view dataset as left.csv and right.csv.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "dpr/synthetic.h"

int main(int argc, char** argv) {
  CLI::App app("Planted two-view data generator", "dp-synth");
  dpr::PlantedSpec spec;
  std::string out = ".";
  app.add_option("--entities", spec.entities);
  app.add_option("--planted", spec.planted, "shared latent attributes");
  app.add_option("--flip", spec.flip, "per-view flip probability");
  app.add_option("--noise-booleans", spec.noise_booleans);
  app.add_option("--numerics", spec.numerics);
  app.add_option("--numeric-levels", spec.numeric_levels);
  app.add_option("--categoricals", spec.categoricals);
  app.add_option("--missing", spec.missing, "missing rate of noise cells");
  app.add_option("--seed", spec.seed);
  app.add_option("--out", out, "output directory");
  CLI11_PARSE(app, argc, argv);

  const dpr::Dataset data = dpr::MakePlantedDataset(spec);
  std::filesystem::create_directories(out);
  std::ofstream left(std::filesystem::path(out) / "left.csv");
  std::ofstream right(std::filesystem::path(out) / "right.csv");
  dpr::WriteCsvView(left, data.left());
  dpr::WriteCsvView(right, data.right());
  if (!left || !right) {
    std::cerr << "failed writing to " << out << '\n';
    return 1;
  }
  return 0;
}
