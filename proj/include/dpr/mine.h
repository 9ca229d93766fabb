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

// Mining drivers: alternating tree induction and tree-pair sampling.

#ifndef DPR_MINE_H_
#define DPR_MINE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dpr/curator.h"
#include "dpr/redescribe.h"

namespace dpr {

enum class Algorithm { kAltExpM, kAltMcmc, kTreePair };

std::string_view AlgorithmName(Algorithm algorithm);
// Accepts "alt-expm", "alt-mcmc" and "treepair"; throws std::invalid_argument.
Algorithm ParseAlgorithm(std::string_view text);

struct MinerConfig {
  Algorithm algorithm = Algorithm::kTreePair;
  double epsilon = 1.0;
  std::size_t intr = 4;
  std::size_t rmiter = 1;
  std::size_t mciter = 10000;
  double sigma = 0.005;
  std::size_t window = 500;
  int depth = 4;
  double omega = 0.1;
  Constraints constraints;
  std::uint64_t seed = 0;
  double prune_threshold = 0.0;
  bool no_noise = false;

  // Throws std::invalid_argument naming the offending field.
  void Validate() const;
};

// Budget of one tree or one extraction in the alternation algorithms.
double AlternationUnit(const MinerConfig& config);

// Runs the configured algorithm against `curator`, spending exactly
// config.epsilon. Results of all trials are unioned and deduplicated by
// query text, first occurrence kept. Pruning is not applied.
std::vector<Redescription> CreateRedsAlt(Curator& curator,
                                         const MinerConfig& config);
std::vector<Redescription> MineTreePair(Curator& curator,
                                        const MinerConfig& config);
std::vector<Redescription> Mine(Curator& curator, const MinerConfig& config);

}  // namespace dpr

#endif  // DPR_MINE_H_
