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

#include "ucp/calibration.hpp"

#include <algorithm>
#include <memory>
#include <random>

#include "gtest/gtest.h"
#include "ucp/unlabeled.hpp"

namespace ucp {
namespace {

// Sort-and-index oracle with the rank computed in exact integer
// arithmetic for alpha = m / 1000.
double oracle_quantile(std::vector<double> scores, int alpha_per_mille) {
  const std::size_t n = scores.size();
  const std::size_t num = (n + 1) * static_cast<std::size_t>(1000 - alpha_per_mille);
  const std::size_t k = (num + 999) / 1000;
  if (k > n) return kInfiniteScore;
  std::sort(scores.begin(), scores.end());
  return scores[k - 1];
}

AlphabetPtr letters(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
  return std::make_shared<const Alphabet>(std::move(names));
}

TEST(ConformalQuantile, FourScoresQuarterAlpha) {
  const std::vector<double> s = {0.3, 0.1, 0.4, 0.2};
  const auto q = conformal_quantile(s, 0.25);
  EXPECT_EQ(q.rank, 4u);
  EXPECT_DOUBLE_EQ(q.value, 0.4);
  EXPECT_DOUBLE_EQ(q.value, oracle_quantile(s, 250));
  EXPECT_DOUBLE_EQ(q.level(), 1.0);
}

TEST(ConformalQuantile, RankBeyondNIsInfinite) {
  const std::vector<double> s = {0.1, 0.2, 0.3, 0.4, 0.5};
  const auto q = conformal_quantile(s, 0.05);
  EXPECT_EQ(q.rank, 6u);
  EXPECT_TRUE(q.infinite());
}

TEST(ConformalQuantile, SingleScore) {
  const std::vector<double> s = {0.42};
  const auto q = conformal_quantile(s, 0.5);
  EXPECT_EQ(q.rank, 1u);
  EXPECT_DOUBLE_EQ(q.value, 0.42);
}

TEST(ConformalQuantile, Errors) {
  const std::vector<double> s = {0.1};
  EXPECT_THROW(conformal_quantile({}, 0.1), InvalidArgument);
  EXPECT_THROW(conformal_quantile(s, 0.0), InvalidArgument);
  EXPECT_THROW(conformal_quantile(s, 1.0), InvalidArgument);
  EXPECT_THROW(conformal_quantile(s, 1.5), InvalidArgument);
  const std::vector<double> bad = {0.1, INFINITY};
  EXPECT_THROW(conformal_quantile(bad, 0.1), InvalidArgument);
}

TEST(ConformalQuantile, ExactIntegerProductsDoNotRoundUp) {
  // (n+1)(1-alpha) is an integer in exact arithmetic for all of these.
  EXPECT_EQ(conformal_rank(9, 0.1), 9u);
  EXPECT_EQ(conformal_rank(19, 0.05), 19u);
  EXPECT_EQ(conformal_rank(99, 0.01), 99u);
  EXPECT_EQ(conformal_rank(999, 0.3), 700u);
  EXPECT_EQ(conformal_rank(10, 0.1), 10u);  // 9.9 -> 10
}

TEST(ConformalQuantile, AgreesWithOracleOnRandomInstances) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + gen() % 60;
    const int m = 1 + static_cast<int>(gen() % 999);
    std::vector<double> s(n);
    for (auto& v : s) v = std::round(u(gen) * 20.0) / 20.0;  // with ties
    const auto q = conformal_quantile(s, m / 1000.0);
    EXPECT_EQ(q.value, oracle_quantile(s, m)) << "n=" << n << " alpha=" << m;
  }
}

TEST(ConformalQuantile, PermutationInvariantAndMonotoneInAlpha) {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> s(1 + gen() % 40);
    for (auto& v : s) v = u(gen);
    const double a1 = 0.01 + 0.5 * u(gen) / 3.0;
    const double a2 = a1 + 0.01 + 0.4 * u(gen) / 3.0;
    const auto q = conformal_quantile(s, a1);
    std::shuffle(s.begin(), s.end(), gen);
    EXPECT_EQ(conformal_quantile(s, a1).value, q.value);
    EXPECT_GE(q.value, conformal_quantile(s, a2).value);
    EXPECT_GT(q.level(), 1.0 - a1 - 1e-12);
  }
}

TEST(Calibrator, TenScoresAlphaTenPercent) {
  std::vector<double> s;
  for (int i = 1; i <= 10; ++i) s.push_back(i / 10.0);
  const auto c = Calibrator::for_classification(letters(2), s, 0.1);
  EXPECT_EQ(c.quantile().rank, 10u);
  EXPECT_DOUBLE_EQ(c.q(), 1.0);
  EXPECT_FALSE(c.unlabeled());
  EXPECT_DOUBLE_EQ(c.guarantee(), 0.9);
}

TEST(Calibrator, ConstantScores) {
  const std::vector<double> s(50, 0.37);
  for (double a : {0.05, 0.2, 0.5, 0.9}) {
    EXPECT_DOUBLE_EQ(Calibrator::for_regression(1, s, a).q(), 0.37);
  }
}

class FixedClassifier : public Classifier {
 public:
  explicit FixedClassifier(AlphabetPtr a) : alphabet_(std::move(a)) {}
  const AlphabetPtr& alphabet() const override { return alphabet_; }
  ProbabilityVector predict_proba(std::span<const double> x) const override {
    return ProbabilityVector(alphabet_, {x[0], 1.0 - x[0]});
  }

 private:
  AlphabetPtr alphabet_;
};

class ShiftRegressor : public Regressor {
 public:
  std::size_t output_dimension() const override { return 1; }
  RegressionOutput predict(std::span<const double> x) const override {
    return RegressionOutput({x[0] + 1.0});
  }
};

TEST(Calibrator, LabeledFromModel) {
  const auto alphabet = letters(2);
  const FixedClassifier model(alphabet);
  std::vector<ClassificationExample> pairs;
  for (int i = 1; i <= 10; ++i) pairs.push_back({{i / 10.0}, 0});
  // Scores are 1 - p_a = 0.9, 0.8, ..., 0.0.
  const auto c = calibrate_labeled(std::span<const ClassificationExample>(pairs),
                                   model, 0.3);
  EXPECT_EQ(c.quantile().rank, 8u);
  EXPECT_NEAR(c.q(), 0.7, 1e-12);

  std::vector<ClassificationExample> bad = {{{0.5}, 7}};
  EXPECT_THROW(calibrate_labeled(std::span<const ClassificationExample>(bad),
                                 model, 0.3),
               UnknownLabel);
  EXPECT_THROW(calibrate_labeled(std::span<const ClassificationExample>(), model, 0.3),
               InvalidArgument);

  const ShiftRegressor reg;
  std::vector<RegressionExample> rp = {{{0.0}, RegressionOutput{3.0}},
                                       {{0.0}, RegressionOutput{1.5}}};
  const auto rc = calibrate_labeled(std::span<const RegressionExample>(rp), reg, 0.5);
  EXPECT_DOUBLE_EQ(rc.q(), 2.0);  // scores {2, 0.5}, rank ceil(1.5) = 2
}

TEST(PredictionSet, WorkedPersonBothClassesIncluded) {
  const auto alphabet = letters(4);
  const std::vector<double> s(10, 0.826);
  const auto c = Calibrator::for_classification(alphabet, s, 0.05 + 0.05);
  const ProbabilityVector probs(alphabet, {0.111, 0.0, 0.264, 0.625});
  const auto set = prediction_set(c, probs);
  EXPECT_TRUE(set.contains(2));
  EXPECT_TRUE(set.contains(3));
  EXPECT_FALSE(set.contains(1));
  EXPECT_NEAR(c.probability_threshold(), 0.174, 1e-12);
}

TEST(PredictionSet, InfiniteQuantileGivesFullAlphabet) {
  const auto alphabet = letters(3);
  const std::vector<double> s = {0.1, 0.2};
  const auto c = Calibrator::for_classification(alphabet, s, 0.05);
  ASSERT_TRUE(c.quantile().infinite());
  const auto set = prediction_set(c, ProbabilityVector(alphabet, {1.0, 0.0, 0.0}));
  EXPECT_EQ(set.size(), 3u);
  EXPECT_DOUBLE_EQ(c.probability_threshold(), 0.0);
}

TEST(PredictionSet, AgreesWithExhaustiveFilter) {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = 1 + gen() % 6;
    const auto alphabet = letters(m);
    std::vector<double> p(m);
    double sum = 0.0;
    for (auto& v : p) sum += (v = u(gen));
    for (auto& v : p) v /= sum;
    std::vector<double> scores(1 + gen() % 30);
    for (auto& v : scores) v = u(gen);
    const double alpha = 0.01 + 0.98 * u(gen);
    const auto c = Calibrator::for_classification(alphabet, scores, alpha);
    const auto set = prediction_set(c, ProbabilityVector(alphabet, p));
    std::vector<Label> oracle;
    for (Label y = 0; y < m; ++y) {
      if (1.0 - p[y] <= c.q()) oracle.push_back(y);
    }
    EXPECT_EQ(set.labels, oracle);
  }
}

TEST(PredictionSet, MonotoneInAlpha) {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto alphabet = letters(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> scores(1 + gen() % 50);
    for (auto& v : scores) v = u(gen);
    std::vector<double> p = {u(gen), u(gen), u(gen), u(gen)};
    double sum = p[0] + p[1] + p[2] + p[3];
    for (auto& v : p) v /= sum;
    const ProbabilityVector probs(alphabet, p);
    const auto small = prediction_set(Calibrator::for_classification(alphabet, scores, 0.05), probs);
    const auto large = prediction_set(Calibrator::for_classification(alphabet, scores, 0.3), probs);
    EXPECT_TRUE(std::includes(small.labels.begin(), small.labels.end(),
                              large.labels.begin(), large.labels.end()));
  }
}

TEST(PredictionSet, Mismatches) {
  const auto c = Calibrator::for_classification(letters(2), {0.5}, 0.5);
  EXPECT_THROW(prediction_set(c, ProbabilityVector(letters(3), {0.2, 0.3, 0.5})),
               InvalidArgument);
  EXPECT_THROW(prediction_interval(c, RegressionOutput{1.0}), InvalidArgument);
  // Equal alphabets held by different pointers are compatible.
  EXPECT_NO_THROW(prediction_set(c, ProbabilityVector(letters(2), {0.2, 0.8})));
}

TEST(PredictionInterval, OneDimensional) {
  const auto c = Calibrator::for_regression(1, {2.0}, 0.5);
  const auto iv = prediction_interval(c, RegressionOutput{10.0});
  EXPECT_DOUBLE_EQ(iv.radius, 2.0);
  EXPECT_TRUE(iv.contains(RegressionOutput{8.0}));
  EXPECT_TRUE(iv.contains(RegressionOutput{12.0}));
  EXPECT_FALSE(iv.contains(RegressionOutput{12.001}));
}

TEST(PredictionInterval, ZeroRadiusIsThePoint) {
  const auto c = Calibrator::for_regression(1, {0.0, 0.0}, 0.4);
  const auto iv = prediction_interval(c, RegressionOutput{3.0});
  EXPECT_TRUE(iv.contains(RegressionOutput{3.0}));
  EXPECT_FALSE(iv.contains(RegressionOutput{3.0 + 1e-9}));
}

TEST(PredictionInterval, TwoDimensionalL1Ball) {
  const auto c = Calibrator::for_regression(2, {1.0}, 0.5);
  const auto iv = prediction_interval(c, RegressionOutput{0.0, 0.0});
  // l1 oracle: 0.4 + 0.5 = 0.9 <= 1, 0.7 + 0.7 = 1.4 > 1.
  EXPECT_TRUE(iv.contains(RegressionOutput{0.4, 0.5}));
  EXPECT_FALSE(iv.contains(RegressionOutput{0.7, 0.7}));
  EXPECT_THROW(prediction_interval(c, RegressionOutput{1.0}), InvalidArgument);
}

TEST(Calibrator, RestoreValidatesConsistency) {
  ConformalQuantile q{10, 0.1, 10, 0.5};
  EXPECT_NO_THROW(Calibrator::restore(ScoreKind::kRegression, q, nullptr, 1, std::nullopt));
  q.rank = 9;
  EXPECT_THROW(Calibrator::restore(ScoreKind::kRegression, q, nullptr, 1, std::nullopt),
               InvalidArgument);
  ConformalQuantile inf{5, 0.05, 6, 0.3};
  EXPECT_THROW(Calibrator::restore(ScoreKind::kRegression, inf, nullptr, 1, std::nullopt),
               InvalidArgument);
}

}  // namespace
}  // namespace ucp
