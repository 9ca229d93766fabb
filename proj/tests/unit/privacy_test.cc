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

#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "dpr/error.h"
#include "dpr/privacy.h"
#include "dpr/random.h"

namespace dpr {
namespace {

TEST_CASE("exponential mechanism probabilities") {
  const std::vector<double> q = {0.0, 1.0, 2.0};
  const std::vector<double> p = ExpMechProbabilities(q, 2.0, 1.0);
  // exp(q) / (1 + e + e^2)
  CHECK(p[0] == doctest::Approx(0.0900306).epsilon(1e-6));
  CHECK(p[1] == doctest::Approx(0.2447285).epsilon(1e-6));
  CHECK(p[2] == doctest::Approx(0.6652410).epsilon(1e-6));
}

TEST_CASE("exponential mechanism is shift invariant and stable") {
  const std::vector<double> a = ExpMechProbabilities(
      std::vector<double>{1e6, 1e6 + 1.0}, 2.0, 1.0);
  const std::vector<double> b = ExpMechProbabilities(
      std::vector<double>{0.0, 1.0}, 2.0, 1.0);
  CHECK(a[0] == doctest::Approx(b[0]));
  CHECK(a[1] == doctest::Approx(b[1]));
}

TEST_CASE("exponential mechanism limits") {
  const std::vector<double> q = {3.0, 5.0, 5.0};
  const std::vector<double> hard = ExpMechProbabilities(
      q, std::numeric_limits<double>::infinity(), 1.0);
  CHECK(hard == std::vector<double>{0.0, 1.0, 0.0});
  const std::vector<double> soft = ExpMechProbabilities(q, 1e-12, 1.0);
  for (double p : soft) CHECK(p == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(ExpMechProbabilities(std::vector<double>{}, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(ExpMechProbabilities(q, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ExpMechProbabilities(q, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("metropolis acceptance") {
  CHECK(MhAcceptProbability(2.0, 1.0, 2.0, 1.0) ==
        doctest::Approx(std::exp(-1.0)));
  CHECK(MhAcceptProbability(1.0, 2.0, 2.0, 1.0) == 1.0);
  CHECK(MhAcceptProbability(1.0, 1.0, 2.0, 1.0) == 1.0);
  CHECK(MhAcceptProbability(2.0, 1.0,
                            std::numeric_limits<double>::infinity(), 1.0) ==
        0.0);
}

TEST_CASE("laplace noise") {
  RandomSource rng(3);
  CHECK_THROWS_AS(LaplaceNoise(0.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(LaplaceNoise(-1.0, rng), std::invalid_argument);
  double sum = 0.0;
  double sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = LaplaceNoise(2.0, rng);
    CHECK(std::isfinite(x));
    sum += x;
    sq += x * x;
  }
  CHECK(std::abs(sum / n) < 0.05);
  CHECK(sq / n == doctest::Approx(8.0).epsilon(0.03));
}

TEST_CASE("noisy count without noise is exact") {
  RandomSource rng(1);
  CHECK(NoisyCount(17.0, 0.5, rng, NoiseMode::kNone) == 17.0);
  CHECK(NoisyCount(17.0, std::numeric_limits<double>::infinity(), rng) ==
        17.0);
  CHECK(NoisyCount(17.0, 0.5, rng) != 17.0);
}

TEST_CASE("same seed and stream give the same noise") {
  RandomSource a(42, 7);
  RandomSource b(42, 7);
  RandomSource c(42, 8);
  const double x = LaplaceNoise(1.0, a);
  CHECK(x == LaplaceNoise(1.0, b));
  CHECK(x != LaplaceNoise(1.0, c));
}

TEST_CASE("budget accountant") {
  BudgetAccountant acc(1.0);
  acc.Charge("a", 0.25);
  acc.ChargeParallel("b", 0.5, 16);
  CHECK(acc.spent() == doctest::Approx(0.75));
  CHECK(acc.remaining() == doctest::Approx(0.25));
  REQUIRE(acc.ledger().size() == 2);
  CHECK(acc.ledger()[1].partitions == 16);
  CHECK_THROWS_AS(acc.Charge("c", 0.3), BudgetExceededError);
  CHECK(acc.spent() == doctest::Approx(0.75));
  acc.Charge("d", 0.25 + 1e-12);
  CHECK(acc.remaining() == doctest::Approx(0.0));
}

TEST_CASE("many small charges sum to the total") {
  BudgetAccountant acc(1.0);
  for (int i = 0; i < 41; ++i) acc.Charge("unit", 1.0 / 41.0);
  CHECK(std::abs(acc.spent() - 1.0) < 1e-9);
  CHECK_THROWS_AS(acc.Charge("over", 1e-6), BudgetExceededError);
}

}  // namespace
}  // namespace dpr
