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

#ifndef UCP_UNLABELED_HPP_
#define UCP_UNLABELED_HPP_

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ucp/calibration.hpp"
#include "ucp/model.hpp"
#include "ucp/scores.hpp"

namespace ucp {

// Surrogate output for regression: any point at l1 distance `distance`
// from the model prediction.
struct BoundaryPoint {
  double distance;
};

// Estimated calibration score: the largest score over the exactness band
// {y : |s(x, y) - s(x, f(x))| <= beta_tilde}, plus the output attaining it.
struct EstimatedScore {
  Score value;
  std::variant<Label, BoundaryPoint> surrogate;

  std::string describe(const Alphabet* alphabet = nullptr) const;
};

// Band membership for classification. With the 1 - p score the condition
// reduces to |p_max - p_y| <= beta_tilde.
bool in_exactness_band(const ProbabilityVector& probs, Label y,
                       double beta_tilde);

EstimatedScore estimated_score_classification(const ProbabilityVector& probs,
                                              double beta_tilde);

// Closed form for the l1 score: the supremum of d(., y_hat) over the closed
// ball of radius beta_tilde is beta_tilde itself.
EstimatedScore estimated_score_regression(const RegressionOutput& y_hat,
                                          double beta_tilde);

// Unlabeled calibration from precomputed model outputs.
Calibrator calibrate_unlabeled(std::span<const ProbabilityVector> outputs,
                               const ExactnessSpec& exactness, double alpha);
Calibrator calibrate_unlabeled(std::span<const RegressionOutput> outputs,
                               const ExactnessSpec& exactness, double alpha);

// Unlabeled calibration that runs the model on raw inputs.
Calibrator calibrate_unlabeled(std::span<const Features> inputs,
                               const Classifier& model,
                               const ExactnessSpec& exactness, double alpha);
Calibrator calibrate_unlabeled(std::span<const Features> inputs,
                               const Regressor& model,
                               const ExactnessSpec& exactness, double alpha);

// max(0, 1 - alpha - beta).
double guarantee_bound(double alpha, const ExactnessSpec& exactness);

}  // namespace ucp

#endif  // UCP_UNLABELED_HPP_
