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

#include "dpr/mine.h"

#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace dpr {
namespace {

void Append(std::vector<Redescription> found, const std::string& trace,
            std::unordered_set<std::string>& seen,
            std::vector<Redescription>& out) {
  for (Redescription& red : found) {
    if (!seen.insert(red.Key()).second) continue;
    red.trace = trace;
    out.push_back(std::move(red));
  }
}

McmcOptions ChainOptions(const MinerConfig& config, double epsilon) {
  McmcOptions options;
  options.epsilon = epsilon;
  options.max_iterations = config.mciter;
  options.sigma = config.sigma;
  options.window = config.window;
  return options;
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kAltExpM:
      return "alt-expm";
    case Algorithm::kAltMcmc:
      return "alt-mcmc";
    case Algorithm::kTreePair:
      return "treepair";
  }
  return "";
}

Algorithm ParseAlgorithm(std::string_view text) {
  for (Algorithm a :
       {Algorithm::kAltExpM, Algorithm::kAltMcmc, Algorithm::kTreePair}) {
    if (AlgorithmName(a) == text) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(text) + "'");
}

void MinerConfig::Validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be positive and finite");
  }
  if (intr < 1) throw std::invalid_argument("intr must be at least 1");
  if (algorithm != Algorithm::kTreePair && rmiter < 1) {
    throw std::invalid_argument("rmiter must be at least 1");
  }
  if (depth < 1 || depth > kMaxTreeDepth) {
    throw std::invalid_argument("depth must be in [1, " +
                                std::to_string(kMaxTreeDepth) + "]");
  }
  if (algorithm == Algorithm::kTreePair && !(omega > 0.0 && omega < 1.0)) {
    throw std::invalid_argument("omega must be in (0, 1)");
  }
  if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be >= 0");
  if (window < 1) throw std::invalid_argument("window must be at least 1");
  if (!(prune_threshold >= 0.0)) {
    throw std::invalid_argument("prune threshold must be >= 0");
  }
  if (!(constraints.max_support_fraction > 0.0)) {
    throw std::invalid_argument("max support fraction must be positive");
  }
}

double AlternationUnit(const MinerConfig& config) {
  return config.epsilon /
         static_cast<double>(config.intr * (2 * config.rmiter + 1));
}

std::vector<Redescription> CreateRedsAlt(Curator& curator,
                                         const MinerConfig& config) {
  if (config.algorithm == Algorithm::kTreePair) {
    throw std::invalid_argument("alternation requires alt-expm or alt-mcmc");
  }
  config.Validate();
  const double unit = AlternationUnit(config);
  const bool expm = config.algorithm == Algorithm::kAltExpM;
  auto build = [&](Side side, const TargetHandle& target) {
    return expm ? curator.BuildTreeExpMech(side, target, config.depth, unit)
                : curator.BuildTreeMcmc(side, target, config.depth,
                                        ChainOptions(config, unit));
  };

  std::vector<Redescription> out;
  std::unordered_set<std::string> seen;
  for (std::size_t t = 0; t < config.intr; ++t) {
    TargetHandle target = curator.DrawInitialTarget();
    Side side = Opposite(target.side());
    DecisionTree latest = build(side, target);
    for (std::size_t i = 0; i < config.rmiter; ++i) {
      target = curator.TargetFromTree(latest);
      DecisionTree other = build(Opposite(side), target);
      side = Opposite(side);
      const DecisionTree& left = side == Side::kLeft ? other : latest;
      const DecisionTree& right = side == Side::kLeft ? latest : other;
      Append(curator.ExtractReds(left, right, unit, config.constraints),
             "trial " + std::to_string(t) + " alternation " +
                 std::to_string(i),
             seen, out);
      latest = std::move(other);
    }
  }
  return out;
}

std::vector<Redescription> MineTreePair(Curator& curator,
                                        const MinerConfig& config) {
  if (config.algorithm != Algorithm::kTreePair) {
    throw std::invalid_argument("tree-pair mining requires treepair");
  }
  config.Validate();
  const double trial = config.epsilon / static_cast<double>(config.intr);
  const double sampling = config.omega * trial;
  const double extraction = trial - sampling;

  std::vector<Redescription> out;
  std::unordered_set<std::string> seen;
  for (std::size_t t = 0; t < config.intr; ++t) {
    const TargetHandle target = curator.DrawInitialTarget();
    const TreePair pair = curator.SampleTreePair(
        target, config.depth, ChainOptions(config, sampling));
    Append(curator.ExtractReds(pair.left, pair.right, extraction,
                               config.constraints),
           "trial " + std::to_string(t), seen, out);
  }
  return out;
}

std::vector<Redescription> Mine(Curator& curator, const MinerConfig& config) {
  return config.algorithm == Algorithm::kTreePair
             ? MineTreePair(curator, config)
             : CreateRedsAlt(curator, config);
}

}  // namespace dpr
