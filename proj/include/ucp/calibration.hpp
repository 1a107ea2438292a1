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

#ifndef UCP_CALIBRATION_HPP_
#define UCP_CALIBRATION_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "ucp/model.hpp"
#include "ucp/scores.hpp"

namespace ucp {

inline constexpr double kInfiniteScore = std::numeric_limits<double>::infinity();

// Rank k = ceil((n+1)(1-alpha)) of the conformal order statistic. A
// relative guard of 1e-12 absorbs representation error so that exact
// integer products do not round up to the next rank.
std::size_t conformal_rank(std::size_t n, double alpha);

// The ceil((n+1)(1-alpha))/n empirical quantile of n calibration scores.
// When the rank exceeds n the value is kInfiniteScore.
struct ConformalQuantile {
  std::size_t n = 0;
  double alpha = 0.0;
  std::size_t rank = 0;
  Score value = kInfiniteScore;

  double level() const { return static_cast<double>(rank) / n; }
  bool infinite() const { return value == kInfiniteScore; }
};

ConformalQuantile conformal_quantile(std::span<const Score> scores,
                                     double alpha);

enum class ScoreKind { kClassification, kRegression };

const char* to_string(ScoreKind kind);

// Holds a conformal quantile together with what it was calibrated for.
// An unlabeled calibrator additionally carries the exactness spec that
// weakens its guarantee to 1 - alpha - beta.
class Calibrator {
 public:
  static Calibrator for_classification(
      AlphabetPtr alphabet, std::vector<Score> scores, double alpha,
      std::optional<ExactnessSpec> exactness = std::nullopt);
  static Calibrator for_regression(
      std::size_t dimension, std::vector<Score> scores, double alpha,
      std::optional<ExactnessSpec> exactness = std::nullopt);

  // Rebuilds a calibrator from a stored quantile (no per-point scores).
  static Calibrator restore(ScoreKind kind, ConformalQuantile quantile,
                            AlphabetPtr alphabet, std::size_t dimension,
                            std::optional<ExactnessSpec> exactness);

  ScoreKind kind() const { return kind_; }
  bool unlabeled() const { return exactness_.has_value(); }
  const ConformalQuantile& quantile() const { return quantile_; }
  Score q() const { return quantile_.value; }
  double alpha() const { return quantile_.alpha; }
  std::size_t n() const { return quantile_.n; }
  const std::vector<Score>& scores() const { return scores_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::size_t dimension() const { return dimension_; }
  const std::optional<ExactnessSpec>& exactness() const { return exactness_; }

  // 1 - alpha for labeled calibration, max(0, 1 - alpha - beta) otherwise.
  double guarantee() const;

  // Minimum predicted probability for inclusion, 1 - q (0 when q >= 1).
  double probability_threshold() const;

 private:
  Calibrator() = default;

  ScoreKind kind_ = ScoreKind::kClassification;
  ConformalQuantile quantile_;
  std::vector<Score> scores_;
  AlphabetPtr alphabet_;
  std::size_t dimension_ = 0;
  std::optional<ExactnessSpec> exactness_;
};

struct PredictionSet {
  AlphabetPtr alphabet;
  std::vector<Label> labels;  // ascending
  ConformalQuantile threshold;

  bool contains(Label y) const;
  std::size_t size() const { return labels.size(); }
};

// l1 ball of the given radius around center; for l = 1 the interval
// [center - radius, center + radius].
struct PredictionInterval {
  RegressionOutput center;
  double radius;

  bool contains(const RegressionOutput& y) const;
};

Calibrator calibrate_labeled(std::span<const ClassificationExample> pairs,
                             const Classifier& model, double alpha);
Calibrator calibrate_labeled(std::span<const RegressionExample> pairs,
                             const Regressor& model, double alpha);

PredictionSet prediction_set(const Calibrator& calibrator,
                             const ProbabilityVector& probs);
PredictionInterval prediction_interval(const Calibrator& calibrator,
                                       const RegressionOutput& y_hat);

}  // namespace ucp

#endif  // UCP_CALIBRATION_HPP_
