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

#ifndef UCP_MODELS_HPP_
#define UCP_MODELS_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ucp/model.hpp"
#include "ucp/scores.hpp"

namespace ucp {

// Per-feature affine map to zero mean and unit variance, estimated from
// training data only. Constant features keep scale 1.
class Standardizer {
 public:
  Standardizer() = default;
  Standardizer(std::vector<double> mean, std::vector<double> scale);

  static Standardizer fit(std::span<const Features> xs);

  std::size_t dimension() const { return mean_.size(); }
  const std::vector<double>& mean() const { return mean_; }
  const std::vector<double>& scale() const { return scale_; }
  Features apply(std::span<const double> x) const;

 private:
  std::vector<double> mean_;
  std::vector<double> scale_;
};

// Indices of the k nearest rows of `points` to `query` under Euclidean
// distance, ordered by (distance, index).
std::vector<std::size_t> nearest_indices(std::span<const Features> points,
                                         std::span<const double> query,
                                         std::size_t k);

class KnnClassifier final : public Classifier {
 public:
  KnnClassifier(AlphabetPtr alphabet, std::vector<ClassificationExample> train,
                std::size_t k);
  KnnClassifier(AlphabetPtr alphabet, std::vector<ClassificationExample> train,
                std::size_t k, Standardizer standardizer);

  const AlphabetPtr& alphabet() const override { return alphabet_; }
  ProbabilityVector predict_proba(std::span<const double> x) const override;

  std::size_t k() const { return k_; }
  const Standardizer& standardizer() const { return standardizer_; }
  const std::vector<ClassificationExample>& training_data() const {
    return train_;
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<ClassificationExample> train_;
  std::vector<Features> scaled_;
  std::size_t k_;
  Standardizer standardizer_;
};

class KnnRegressor final : public Regressor {
 public:
  KnnRegressor(std::vector<RegressionExample> train, std::size_t k);
  KnnRegressor(std::vector<RegressionExample> train, std::size_t k,
               Standardizer standardizer);

  std::size_t output_dimension() const override { return out_dim_; }
  RegressionOutput predict(std::span<const double> x) const override;

  std::size_t k() const { return k_; }
  const Standardizer& standardizer() const { return standardizer_; }
  const std::vector<RegressionExample>& training_data() const { return train_; }

 private:
  std::vector<RegressionExample> train_;
  std::vector<Features> scaled_;
  std::size_t k_;
  std::size_t out_dim_;
  Standardizer standardizer_;
};

struct ExactnessEstimate {
  ExactnessSpec spec;
  std::string source;
  std::size_t n_holdout;
  // Holdout accuracy (classification) or the fraction of holdout errors at
  // or below beta_tilde (regression).
  double holdout_fraction;
};

// Accuracy a of argmax predictions on the holdout; returns (0, 1 - a).
ExactnessEstimate estimate_accuracy(const Classifier& model,
                                    std::span<const ClassificationExample> holdout,
                                    std::string source = "holdout");

// Lower empirical (1 - beta)-quantile of the sorted errors: the smallest e_i
// with at least a (1 - beta) fraction of errors at or below it.
double lower_empirical_quantile(std::span<const double> values, double level);

// beta_tilde = lower empirical (1 - beta)-quantile of l1 holdout errors.
ExactnessEstimate estimate_regression_exactness(
    const Regressor& model, std::span<const RegressionExample> holdout,
    double beta, std::string source = "holdout");

// Plain-text persistence: training data, k and standardization constants.
void save_model(std::ostream& os, const KnnClassifier& model);
void save_model(std::ostream& os, const KnnRegressor& model);
KnnClassifier load_classifier(std::istream& is);
KnnRegressor load_regressor(std::istream& is);

}  // namespace ucp

#endif  // UCP_MODELS_HPP_
