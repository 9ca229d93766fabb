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

#include <string>
#include <vector>

#include "doctest.h"
#include "dpr/curator.h"
#include "dpr/mine.h"
#include "dpr/synthetic.h"

namespace dpr {
namespace {

Dataset Planted(std::size_t entities, double flip) {
  PlantedSpec spec;
  spec.entities = entities;
  spec.planted = 2;
  spec.flip = flip;
  return MakePlantedDataset(spec);
}

MinerConfig Quick(Algorithm algorithm) {
  MinerConfig config;
  config.algorithm = algorithm;
  config.mciter = 150;
  config.window = 50;
  config.depth = 2;
  return config;
}

TEST_CASE("alternation unit") {
  MinerConfig config;
  config.epsilon = 1.0;
  config.intr = 1;
  config.rmiter = 20;
  CHECK(AlternationUnit(config) == doctest::Approx(1.0 / 41.0));
  config.intr = 4;
  config.rmiter = 1;
  CHECK(AlternationUnit(config) == doctest::Approx(1.0 / 12.0));
}

TEST_CASE("every algorithm spends exactly its budget") {
  const Dataset data = Planted(300, 0.05);
  for (Algorithm a :
       {Algorithm::kAltExpM, Algorithm::kAltMcmc, Algorithm::kTreePair}) {
    for (double eps : {1.0, 0.1}) {
      for (std::size_t intr : {1, 3}) {
        for (std::size_t rmiter : {1, 3}) {
          MinerConfig config = Quick(a);
          config.epsilon = eps;
          config.intr = intr;
          config.rmiter = rmiter;
          Curator curator(data, eps, 17);
          Mine(curator, config);
          CAPTURE(AlgorithmName(a));
          CHECK(curator.accountant().spent() ==
                doctest::Approx(eps).epsilon(1e-12));
          CHECK(curator.accountant().remaining() >=
                -BudgetAccountant::kTolerance);
        }
      }
    }
  }
}

TEST_CASE("tree pair trials split by omega") {
  const Dataset data = Planted(300, 0.05);
  MinerConfig config = Quick(Algorithm::kTreePair);
  config.epsilon = 1.0;
  config.intr = 4;
  config.omega = 0.1;
  Curator curator(data, 1.0, 3);
  MineTreePair(curator, config);
  double sampling = 0.0;
  double extraction = 0.0;
  for (const auto& e : curator.accountant().ledger()) {
    if (e.label == "tree pair") {
      CHECK(e.epsilon == doctest::Approx(0.025));
      sampling += e.epsilon;
    } else {
      extraction += e.epsilon;
    }
  }
  CHECK(sampling == doctest::Approx(0.1));
  CHECK(extraction == doctest::Approx(0.9));
}

TEST_CASE("alternation ledger follows the unit") {
  const Dataset data = Planted(300, 0.05);
  MinerConfig config = Quick(Algorithm::kAltMcmc);
  config.epsilon = 1.0;
  config.intr = 2;
  config.rmiter = 2;
  Curator curator(data, 1.0, 3);
  CreateRedsAlt(curator, config);
  const auto& ledger = curator.accountant().ledger();
  // Per trial: 1 + rmiter trees and rmiter two-part extractions.
  CHECK(ledger.size() == 2 * (1 + 2 + 2 * 2));
  for (const auto& e : ledger) {
    const double expected = e.label == "mcmc tree" ? 0.1 : 0.05;
    CHECK(e.epsilon == doctest::Approx(expected));
  }
}

TEST_CASE("mining is deterministic for a seed and stream") {
  const Dataset data = Planted(300, 0.05);
  for (Algorithm a :
       {Algorithm::kAltExpM, Algorithm::kAltMcmc, Algorithm::kTreePair}) {
    auto keys = [&](std::uint64_t stream) {
      Curator curator(data, 1.0, 99, stream);
      std::vector<std::string> out;
      for (const auto& red : Mine(curator, Quick(a))) {
        out.push_back(red.Key() + "|" + red.trace);
      }
      return out;
    };
    CHECK(keys(0) == keys(0));
  }
}

TEST_CASE("noise-free mining finds an exact planted pair") {
  const Dataset data = Planted(500, 0.0);
  for (Algorithm a :
       {Algorithm::kAltExpM, Algorithm::kAltMcmc, Algorithm::kTreePair}) {
    MinerConfig config = Quick(a);
    config.epsilon = 1000.0;
    config.mciter = 1000;
    config.depth = 1;
    Curator curator(data, config.epsilon, 5, 0, NoiseMode::kNone);
    bool exact = false;
    for (const auto& red : Mine(curator, config)) {
      exact = exact || red.stats.jaccard == 1.0;
    }
    CAPTURE(AlgorithmName(a));
    CHECK(exact);
  }
}

TEST_CASE("configuration validation") {
  MinerConfig config;
  CHECK_NOTHROW(config.Validate());
  config.omega = 1.0;
  CHECK_THROWS_AS(config.Validate(), std::invalid_argument);
  config.omega = 0.5;
  config.epsilon = 0.0;
  CHECK_THROWS_AS(config.Validate(), std::invalid_argument);
  config.epsilon = 1.0;
  config.depth = 0;
  CHECK_THROWS_AS(config.Validate(), std::invalid_argument);
  CHECK(ParseAlgorithm("alt-mcmc") == Algorithm::kAltMcmc);
  CHECK_THROWS_AS(ParseAlgorithm("greedy"), std::invalid_argument);
  const Dataset data = Planted(100, 0.0);
  Curator curator(data, 1.0, 1);
  CHECK_THROWS_AS(CreateRedsAlt(curator, MinerConfig{}),
                  std::invalid_argument);
}

}  // namespace
}  // namespace dpr
