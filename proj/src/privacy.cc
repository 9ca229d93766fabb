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

#include "dpr/privacy.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dpr/error.h"
#include "dpr/text.h"

namespace dpr {
namespace {

void CheckEpsilon(double epsilon, const char* where) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument(std::string(where) +
                                ": epsilon must be positive");
  }
}

}  // namespace

double LaplaceNoise(double scale, RandomSource& rng) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("LaplaceNoise: scale must be positive");
  }
  // Inverse CDF on u in (-1/2, 1/2).
  const double u = rng.OpenUniform() - 0.5;
  const double magnitude = -scale * std::log1p(-2.0 * std::abs(u));
  return u < 0.0 ? -magnitude : magnitude;
}

double NoisyCount(double true_count, double epsilon, RandomSource& rng,
                  NoiseMode mode) {
  CheckEpsilon(epsilon, "NoisyCount");
  if (mode == NoiseMode::kNone || std::isinf(epsilon)) return true_count;
  return true_count + LaplaceNoise(1.0 / epsilon, rng);
}

std::vector<double> ExpMechProbabilities(std::span<const double> qualities,
                                         double epsilon, double sensitivity) {
  if (qualities.empty()) {
    throw std::invalid_argument("ExpMechSelect: no candidates");
  }
  CheckEpsilon(epsilon, "ExpMechSelect");
  if (!(sensitivity > 0.0)) {
    throw std::invalid_argument("ExpMechSelect: sensitivity must be positive");
  }
  for (double q : qualities) {
    if (!std::isfinite(q)) {
      throw std::invalid_argument("ExpMechSelect: non-finite quality");
    }
  }
  const auto best = std::max_element(qualities.begin(), qualities.end());
  std::vector<double> probs(qualities.size(), 0.0);
  if (std::isinf(epsilon)) {
    probs[static_cast<std::size_t>(best - qualities.begin())] = 1.0;
    return probs;
  }
  const double scale = epsilon / (2.0 * sensitivity);
  double total = 0.0;
  for (std::size_t i = 0; i < qualities.size(); ++i) {
    probs[i] = std::exp(scale * (qualities[i] - *best));
    total += probs[i];
  }
  for (double& p : probs) p /= total;
  return probs;
}

std::size_t ExpMechSelect(std::span<const double> qualities, double epsilon,
                          double sensitivity, RandomSource& rng) {
  const std::vector<double> weights =
      ExpMechProbabilities(qualities, epsilon, sensitivity);
  double target = rng.Uniform();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    target -= weights[i];
    if (target < 0.0) return i;
  }
  // Rounding left a sliver of mass: fall back to the last positive weight.
  for (std::size_t i = weights.size(); i-- > 0;) {
    if (weights[i] > 0.0) return i;
  }
  return weights.size() - 1;
}

double MhAcceptProbability(double score_old, double score_new, double epsilon,
                           double sensitivity) {
  CheckEpsilon(epsilon, "MhAccept");
  if (score_new >= score_old) return 1.0;
  if (std::isinf(epsilon)) return 0.0;
  return std::exp(epsilon * (score_new - score_old) / (2.0 * sensitivity));
}

bool MhAccept(double score_old, double score_new, double epsilon,
              double sensitivity, RandomSource& rng) {
  const double alpha =
      MhAcceptProbability(score_old, score_new, epsilon, sensitivity);
  if (alpha >= 1.0) return true;
  return rng.Uniform() < alpha;
}

BudgetAccountant::BudgetAccountant(double total) : total_(total) {
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw std::invalid_argument("privacy budget must be positive and finite");
  }
}

void BudgetAccountant::Charge(std::string label, double epsilon) {
  ChargeParallel(std::move(label), epsilon, 1);
}

void BudgetAccountant::ChargeParallel(std::string label, double epsilon,
                                      std::size_t partitions) {
  CheckEpsilon(epsilon, "BudgetAccountant::Charge");
  if (spent_ + epsilon > total_ + kTolerance) {
    throw BudgetExceededError("charge '" + label + "' of " +
                              FormatNumber(epsilon) + " exceeds remaining " +
                              FormatNumber(remaining()));
  }
  spent_ += epsilon;
  ledger_.push_back({std::move(label), epsilon, partitions});
}

}  // namespace dpr
