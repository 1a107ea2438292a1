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

#include "ucp/models.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>

#include "gtest/gtest.h"

namespace ucp {
namespace {

AlphabetPtr letters(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, 'A' + i));
  return std::make_shared<const Alphabet>(std::move(names));
}

// Identity standardizer so tests can reason in raw coordinates.
Standardizer identity(std::size_t dim) {
  return Standardizer(std::vector<double>(dim, 0.0), std::vector<double>(dim, 1.0));
}

TEST(Standardizer, FitsMeanAndPopulationScale) {
  const std::vector<Features> xs = {{1.0, 5.0}, {3.0, 5.0}};
  const auto s = Standardizer::fit(xs);
  EXPECT_DOUBLE_EQ(s.mean()[0], 2.0);
  EXPECT_DOUBLE_EQ(s.scale()[0], 1.0);
  EXPECT_DOUBLE_EQ(s.scale()[1], 1.0);  // constant column
  const auto z = s.apply(std::vector<double>{3.0, 7.0});
  EXPECT_DOUBLE_EQ(z[0], 1.0);
  EXPECT_DOUBLE_EQ(z[1], 2.0);
  EXPECT_THROW(s.apply(std::vector<double>{1.0}), InvalidArgument);
  EXPECT_THROW(Standardizer::fit({}), InvalidArgument);
}

TEST(NearestIndices, AgreesWithBruteForce) {
  std::mt19937_64 gen(61);
  std::uniform_int_distribution<int> coord(-5, 5);  // integer grid forces ties
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + gen() % 40;
    std::vector<Features> pts(n, Features(2));
    for (auto& p : pts) p = {double(coord(gen)), double(coord(gen))};
    const Features q = {double(coord(gen)), double(coord(gen))};
    const std::size_t k = 1 + gen() % n;
    std::vector<std::pair<double, std::size_t>> all;
    for (std::size_t i = 0; i < n; ++i) {
      const double dx = pts[i][0] - q[0], dy = pts[i][1] - q[1];
      all.push_back({dx * dx + dy * dy, i});
    }
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> oracle;
    for (std::size_t i = 0; i < k; ++i) oracle.push_back(all[i].second);
    EXPECT_EQ(nearest_indices(pts, q, k), oracle);
  }
  const std::vector<Features> one = {{0.0}};
  EXPECT_THROW(nearest_indices(one, std::vector<double>{0.0}, 2), InvalidArgument);
}

TEST(KnnClassifier, OneNeighborReturnsTrainingLabel) {
  const auto alphabet = letters(3);
  std::vector<ClassificationExample> train = {{{0.0, 0.0}, 0}, {{5.0, 5.0}, 1}, {{-5.0, 5.0}, 2}};
  const KnnClassifier model(alphabet, train, 1);
  for (const auto& e : train) {
    const auto p = model.predict_proba(e.x);
    EXPECT_EQ(p[e.y], 1.0);
    EXPECT_EQ(model.predict(e.x), e.y);
  }
}

TEST(KnnClassifier, VoteFractions) {
  const auto alphabet = letters(3);
  std::vector<ClassificationExample> train = {
      {{0.0}, 0}, {{1.0}, 0}, {{2.0}, 1}, {{3.0}, 2}, {{100.0}, 1}};
  const KnnClassifier model(alphabet, train, 4, identity(1));
  const auto p = model.predict_proba(std::vector<double>{1.0});
  EXPECT_DOUBLE_EQ(p[0], 0.5);
  EXPECT_DOUBLE_EQ(p[1], 0.25);
  EXPECT_DOUBLE_EQ(p[2], 0.25);
}

TEST(KnnClassifier, Errors) {
  const auto alphabet = letters(2);
  std::vector<ClassificationExample> train = {{{0.0}, 0}, {{1.0}, 1}};
  EXPECT_THROW(KnnClassifier(alphabet, {}, 1), InvalidArgument);
  EXPECT_THROW(KnnClassifier(alphabet, train, 0), InvalidArgument);
  EXPECT_THROW(KnnClassifier(alphabet, train, 3), InvalidArgument);
  std::vector<ClassificationExample> ragged = {{{0.0}, 0}, {{1.0, 2.0}, 1}};
  EXPECT_THROW(KnnClassifier(alphabet, ragged, 1), InvalidArgument);
  std::vector<ClassificationExample> unknown = {{{0.0}, 5}};
  EXPECT_THROW(KnnClassifier(alphabet, unknown, 1), UnknownLabel);
  const KnnClassifier model(alphabet, train, 1);
  EXPECT_THROW(model.predict_proba(std::vector<double>{0.0, 1.0}), InvalidArgument);
}

TEST(KnnRegressor, MeanOfNeighbors) {
  std::vector<RegressionExample> train = {{{0.0}, RegressionOutput{1.0}},
                                          {{1.0}, RegressionOutput{3.0}},
                                          {{2.0}, RegressionOutput{8.0}},
                                          {{9.0}, RegressionOutput{100.0}}};
  const KnnRegressor model(train, 3, identity(1));
  EXPECT_DOUBLE_EQ(model.predict(std::vector<double>{1.0})[0], 4.0);
  const KnnRegressor exact(train, 1);
  EXPECT_DOUBLE_EQ(exact.predict(std::vector<double>{9.0})[0], 100.0);
}

TEST(EstimateAccuracy, ErrorRateOnHoldout) {
  const auto alphabet = letters(2);
  std::vector<ClassificationExample> train = {{{0.0}, 0}, {{10.0}, 1}};
  const KnnClassifier model(alphabet, train, 1, identity(1));
  // 887 correct, 113 wrong.
  std::vector<ClassificationExample> holdout;
  for (int i = 0; i < 1000; ++i) holdout.push_back({{0.0}, Label(i < 887 ? 0 : 1)});
  const auto est = estimate_accuracy(model, holdout);
  EXPECT_NEAR(est.spec.beta(), 0.113, 1e-12);
  EXPECT_EQ(est.spec.beta_tilde(), 0.0);
  EXPECT_EQ(est.n_holdout, 1000u);
  EXPECT_THROW(estimate_accuracy(model, {}), InvalidArgument);
}

TEST(LowerEmpiricalQuantile, Examples) {
  const std::vector<double> e = {4.0, 1.0, 3.0, 2.0};
  EXPECT_EQ(lower_empirical_quantile(e, 0.5), 2.0);
  EXPECT_EQ(lower_empirical_quantile(e, 0.8), 4.0);
  EXPECT_EQ(lower_empirical_quantile(e, 0.75), 3.0);
  EXPECT_EQ(lower_empirical_quantile(e, 1.0), 4.0);
  EXPECT_THROW(lower_empirical_quantile({}, 0.5), InvalidArgument);
  EXPECT_THROW(lower_empirical_quantile(e, 0.0), InvalidArgument);
}

TEST(LowerEmpiricalQuantile, CoversAtLeastTheLevel) {
  std::mt19937_64 gen(67);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> v(1 + gen() % 50);
    for (auto& x : v) x = u(gen);
    const double level = 0.01 + 0.98 * u(gen);
    const double t = lower_empirical_quantile(v, level);
    const auto below = std::count_if(v.begin(), v.end(), [&](double x) { return x <= t; });
    EXPECT_GE(double(below), level * v.size() - 1e-9);
    // The next smaller sample value would not cover the level.
    const auto strictly = std::count_if(v.begin(), v.end(), [&](double x) { return x < t; });
    EXPECT_LT(double(strictly), level * v.size() + 1e-9);
  }
}

TEST(EstimateRegressionExactness, ToleranceFromHoldoutErrors) {
  std::vector<RegressionExample> train = {{{0.0}, RegressionOutput{0.0}}};
  const KnnRegressor model(train, 1);
  std::vector<RegressionExample> holdout;
  for (double y : {1.0, -2.0, 3.0, -4.0}) holdout.push_back({{0.0}, RegressionOutput{y}});
  const auto est = estimate_regression_exactness(model, holdout, 0.5);
  EXPECT_EQ(est.spec.beta_tilde(), 2.0);
  EXPECT_EQ(est.spec.beta(), 0.5);
  EXPECT_GE(est.holdout_fraction, 0.5);
  EXPECT_THROW(estimate_regression_exactness(model, holdout, 1.0), InvalidArgument);
  // A smaller beta never gives a smaller tolerance.
  EXPECT_GE(estimate_regression_exactness(model, holdout, 0.2).spec.beta_tilde(), 2.0);
}

TEST(ModelPersistence, ClassifierRoundTrip) {
  std::mt19937_64 gen(71);
  std::normal_distribution<double> n(0.0, 2.0);
  const auto alphabet = letters(3);
  std::vector<ClassificationExample> train;
  for (int i = 0; i < 60; ++i) train.push_back({{n(gen), n(gen)}, Label(gen() % 3)});
  const KnnClassifier model(alphabet, train, 7);
  std::stringstream ss;
  save_model(ss, model);
  const auto loaded = load_classifier(ss);
  EXPECT_EQ(loaded.k(), 7u);
  EXPECT_EQ(*loaded.alphabet(), *alphabet);
  for (int i = 0; i < 50; ++i) {
    const std::vector<double> x = {n(gen), n(gen)};
    const auto a = loaded.predict_proba(x), b = model.predict_proba(x);
    EXPECT_TRUE(std::ranges::equal(a.values(), b.values()));
  }
  std::stringstream again(ss.str());
  EXPECT_THROW(load_regressor(again), InvalidArgument);
}

TEST(ModelPersistence, RegressorRoundTripAndCorruptInput) {
  std::vector<RegressionExample> train;
  for (int i = 0; i < 20; ++i) train.push_back({{i * 0.3}, RegressionOutput{std::sin(i * 0.3)}});
  const KnnRegressor model(train, 3);
  std::stringstream ss;
  save_model(ss, model);
  const auto loaded = load_regressor(ss);
  for (double x = 0.0; x < 6.0; x += 0.37) {
    EXPECT_EQ(loaded.predict(std::vector<double>{x})[0],
              model.predict(std::vector<double>{x})[0]);
  }
  std::stringstream bad("ucp-knn 9\n");
  EXPECT_THROW(load_regressor(bad), InvalidArgument);
  std::stringstream truncated(ss.str().substr(0, ss.str().size() / 2));
  EXPECT_THROW(load_regressor(truncated), InvalidArgument);
}

}  // namespace
}  // namespace ucp
