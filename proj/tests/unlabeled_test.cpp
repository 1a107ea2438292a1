// Copyright 2026 The ucp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ucp/unlabeled.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "gtest/gtest.h"

namespace ucp {
namespace {

AlphabetPtr letters(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
  return std::make_shared<const Alphabet>(std::move(names));
}

// Exhaustive oracle: the largest score among labels within beta_tilde of the
// top probability.
double oracle_estimated_score(const std::vector<double>& p, double beta_tilde) {
  const double pmax = *std::max_element(p.begin(), p.end());
  double best = 0.0;
  for (double v : p) {
    if (std::fabs(pmax - v) <= beta_tilde) best = std::max(best, 1.0 - v);
  }
  return best;
}

std::vector<double> random_simplex(std::mt19937_64& gen, std::size_t m) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(m);
  double sum = 0.0;
  for (auto& v : p) sum += (v = u(gen));
  for (auto& v : p) v /= sum;
  return p;
}

TEST(EstimatedScore, ThreeLabelExamples) {
  const auto alphabet = letters(3);
  const ProbabilityVector probs(alphabet, {0.6, 0.3, 0.1});
  EXPECT_NEAR(estimated_score_classification(probs, 0.0).value, 0.4, 1e-12);
  EXPECT_NEAR(estimated_score_classification(probs, 0.1).value, 0.4, 1e-12);
  const auto mid = estimated_score_classification(probs, 0.3);
  EXPECT_NEAR(mid.value, 0.7, 1e-12);
  EXPECT_EQ(std::get<Label>(mid.surrogate), 1u);
  EXPECT_NEAR(estimated_score_classification(probs, 0.5).value, 0.9, 1e-12);
  EXPECT_EQ(mid.describe(alphabet.get()), "label b");
}

TEST(EstimatedScore, ZeroToleranceIsOneMinusTopProbability) {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 2 + gen() % 5;
    const auto p = random_simplex(gen, m);
    const ProbabilityVector probs(letters(m), p);
    const auto e = estimated_score_classification(probs, 0.0);
    EXPECT_DOUBLE_EQ(e.value, 1.0 - probs.max_probability());
    for (Label y = 0; y < m; ++y) EXPECT_LE(e.value, score_classification(probs, y));
  }
}

TEST(EstimatedScore, AgreesWithExhaustiveOracle) {
  std::mt19937_64 gen(43);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t m = 1 + gen() % 7;
    const auto p = random_simplex(gen, m);
    const double bt = u(gen);
    const ProbabilityVector probs(letters(m), p);
    EXPECT_DOUBLE_EQ(estimated_score_classification(probs, bt).value,
                     oracle_estimated_score(p, bt));
  }
}

TEST(EstimatedScore, RejectsNegativeTolerance) {
  const ProbabilityVector probs(letters(2), {0.5, 0.5});
  EXPECT_THROW(estimated_score_classification(probs, -0.1), InvalidArgument);
  EXPECT_THROW(estimated_score_regression(RegressionOutput{1.0}, -0.1), InvalidArgument);
}

// Grid search over the l1 sphere of radius beta_tilde around y_hat; the
// largest reachable distance is the estimated score.
double grid_oracle_regression(const std::vector<double>& y_hat, double bt) {
  double best = 0.0;
  const int steps = 200;
  if (y_hat.size() == 1) {
    for (int i = 0; i <= steps; ++i) {
      const double y = y_hat[0] - bt + 2.0 * bt * i / steps;
      best = std::max(best, std::fabs(y - y_hat[0]));
    }
    return best;
  }
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; j <= steps; ++j) {
      const double a = -bt + 2.0 * bt * i / steps;
      const double b = -bt + 2.0 * bt * j / steps;
      if (std::fabs(a) + std::fabs(b) > bt * (1.0 + 1e-12)) continue;
      best = std::max(best, std::fabs(a) + std::fabs(b));
    }
  }
  return best;
}

TEST(EstimatedScore, RegressionEqualsToleranceInOneAndTwoDimensions) {
  for (double bt : {0.0, 0.25, 1.0, 3.7}) {
    const std::vector<double> one = {2.5};
    const std::vector<double> two = {-1.0, 4.0};
    const auto e1 = estimated_score_regression(RegressionOutput(one), bt);
    const auto e2 = estimated_score_regression(RegressionOutput(two), bt);
    EXPECT_NEAR(e1.value, grid_oracle_regression(one, bt), 1e-9);
    EXPECT_NEAR(e2.value, grid_oracle_regression(two, bt), 1e-9);
    EXPECT_EQ(e1.value, bt);
    EXPECT_EQ(std::get<BoundaryPoint>(e2.surrogate).distance, bt);
  }
}

TEST(EstimatedScore, MonotoneInTolerance) {
  std::mt19937_64 gen(47);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + gen() % 6;
    const ProbabilityVector probs(letters(m), random_simplex(gen, m));
    double prev = -1.0;
    for (int i = 0; i <= 20; ++i) {
      const double v = estimated_score_classification(probs, i / 20.0).value;
      EXPECT_GE(v, prev);
      prev = v;
    }
  }
}

TEST(GuaranteeBound, Values) {
  EXPECT_NEAR(guarantee_bound(0.05, ExactnessSpec(0.0, 0.113)), 0.837, 1e-12);
  EXPECT_NEAR(guarantee_bound(0.1, ExactnessSpec(0.0, 0.0)), 0.9, 1e-12);
  EXPECT_EQ(guarantee_bound(0.6, ExactnessSpec(0.0, 0.5)), 0.0);
  EXPECT_THROW(guarantee_bound(0.0, ExactnessSpec(0.0, 0.1)), InvalidArgument);
}

TEST(CalibrateUnlabeled, RegressionQuantileIsTheTolerance) {
  std::vector<RegressionOutput> outputs;
  for (int i = 0; i < 25; ++i) outputs.push_back(RegressionOutput{i * 0.5});
  const auto c = calibrate_unlabeled(std::span<const RegressionOutput>(outputs),
                                     ExactnessSpec(2.0, 0.2), 0.05);
  EXPECT_TRUE(c.unlabeled());
  EXPECT_EQ(c.q(), 2.0);
  EXPECT_NEAR(c.guarantee(), 0.75, 1e-12);
  const auto iv = prediction_interval(c, RegressionOutput{10.0});
  EXPECT_TRUE(iv.contains(RegressionOutput{8.0}));
  EXPECT_TRUE(iv.contains(RegressionOutput{12.0}));
  EXPECT_FALSE(iv.contains(RegressionOutput{12.5}));
}

TEST(CalibrateUnlabeled, PerfectModelHasZeroQuantile) {
  const auto alphabet = letters(3);
  std::vector<ProbabilityVector> outputs;
  for (int i = 0; i < 30; ++i) {
    std::vector<double> p(3, 0.0);
    p[i % 3] = 1.0;
    outputs.emplace_back(alphabet, p);
  }
  const auto c = calibrate_unlabeled(std::span<const ProbabilityVector>(outputs),
                                     ExactnessSpec(0.0, 0.0), 0.1);
  EXPECT_EQ(c.q(), 0.0);
  const auto set = prediction_set(c, ProbabilityVector(alphabet, {0.0, 1.0, 0.0}));
  EXPECT_EQ(set.labels, std::vector<Label>{1});
}

TEST(CalibrateUnlabeled, QuantileAndSetsMonotoneInTolerance) {
  std::mt19937_64 gen(53);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 2 + gen() % 4;
    const auto alphabet = letters(m);
    std::vector<ProbabilityVector> outputs;
    for (int i = 0; i < 40; ++i) outputs.emplace_back(alphabet, random_simplex(gen, m));
    const ProbabilityVector test(alphabet, random_simplex(gen, m));
    double prev_q = -1.0;
    std::vector<Label> prev_set;
    for (int i = 0; i <= 10; ++i) {
      const auto c = calibrate_unlabeled(std::span<const ProbabilityVector>(outputs),
                                         ExactnessSpec(i / 10.0, 0.1), 0.1);
      const auto set = prediction_set(c, test);
      EXPECT_GE(c.q(), prev_q);
      EXPECT_TRUE(std::includes(set.labels.begin(), set.labels.end(),
                                prev_set.begin(), prev_set.end()));
      prev_q = c.q();
      prev_set = set.labels;
    }
  }
}

TEST(CalibrateUnlabeled, RejectsMixedAlphabetsAndEmpty) {
  std::vector<ProbabilityVector> outputs = {ProbabilityVector(letters(2), {0.5, 0.5}),
                                            ProbabilityVector(letters(3), {0.2, 0.3, 0.5})};
  EXPECT_THROW(calibrate_unlabeled(std::span<const ProbabilityVector>(outputs),
                                   ExactnessSpec(0.0, 0.1), 0.1),
               InvalidArgument);
  EXPECT_THROW(calibrate_unlabeled(std::span<const ProbabilityVector>(),
                                   ExactnessSpec(0.0, 0.1), 0.1),
               InvalidArgument);
}

}  // namespace
}  // namespace ucp
