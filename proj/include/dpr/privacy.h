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

// Differential-privacy primitives: the Laplace mechanism for counts, the
// exponential mechanism for selection, the Metropolis-Hastings acceptance
// rule that simulates it, and sequential-composition bookkeeping.

#ifndef DPR_PRIVACY_H_
#define DPR_PRIVACY_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dpr/random.h"

namespace dpr {

// kNone disables Laplace noise. It exists for oracle testing only; results
// produced under it are not private and are watermarked as such.
enum class NoiseMode { kLaplace, kNone };

// Draw from Laplace(0, scale). Throws std::invalid_argument if scale <= 0.
double LaplaceNoise(double scale, RandomSource& rng);

// true_count + Laplace(0, 1/epsilon): a counting query has sensitivity 1.
// An infinite epsilon or NoiseMode::kNone returns the count unchanged. The
// result is never clamped.
double NoisyCount(double true_count, double epsilon, RandomSource& rng,
                  NoiseMode mode = NoiseMode::kLaplace);

// Selection probabilities exp(eps * q / (2 * sensitivity)), normalized, with
// a uniform base measure. An infinite epsilon puts all mass on the first
// maximal candidate.
std::vector<double> ExpMechProbabilities(std::span<const double> qualities,
                                         double epsilon, double sensitivity);

// Samples an index from ExpMechProbabilities. Throws std::invalid_argument
// on an empty candidate list, non-finite quality, or non-positive
// epsilon/sensitivity.
std::size_t ExpMechSelect(std::span<const double> qualities, double epsilon,
                          double sensitivity, RandomSource& rng);

template <typename Candidate>
const Candidate& ExpMechSelect(std::span<const Candidate> candidates,
                               std::span<const double> qualities,
                               double epsilon, double sensitivity,
                               RandomSource& rng) {
  return candidates[ExpMechSelect(qualities, epsilon, sensitivity, rng)];
}

// min{1, exp(eps * (new - old) / (2 * sensitivity))}.
double MhAcceptProbability(double score_old, double score_new, double epsilon,
                           double sensitivity);
// Draws only when the acceptance probability is below 1.
bool MhAccept(double score_old, double score_new, double epsilon,
              double sensitivity, RandomSource& rng);

// Running sequential-composition total for one mining run.
class BudgetAccountant {
 public:
  static constexpr double kTolerance = 1e-9;

  struct Entry {
    std::string label;
    double epsilon = 0.0;
    // Number of disjoint cells a parallel charge covered (1 otherwise).
    std::size_t partitions = 1;
  };

  explicit BudgetAccountant(double total);

  // Throws std::invalid_argument for epsilon <= 0 and BudgetExceededError
  // if the charge would leave spent > total + kTolerance. A failed charge
  // leaves the ledger untouched.
  void Charge(std::string label, double epsilon);
  // One mechanism applied to `partitions` disjoint subsets of the data costs
  // epsilon once.
  void ChargeParallel(std::string label, double epsilon,
                      std::size_t partitions);

  double total() const { return total_; }
  double spent() const { return spent_; }
  double remaining() const { return total_ - spent_; }
  const std::vector<Entry>& ledger() const { return ledger_; }

 private:
  double total_;
  double spent_ = 0.0;
  std::vector<Entry> ledger_;
};

}  // namespace dpr

#endif  // DPR_PRIVACY_H_
