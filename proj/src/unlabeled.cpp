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
#include <sstream>

namespace ucp {

std::string EstimatedScore::describe(const Alphabet* alphabet) const {
  std::ostringstream os;
  if (const auto* label = std::get_if<Label>(&surrogate)) {
    if (alphabet) {
      os << "label " << alphabet->name(*label);
    } else {
      os << "label #" << *label;
    }
  } else {
    os << "boundary point at l1 distance "
       << std::get<BoundaryPoint>(surrogate).distance;
  }
  return os.str();
}

bool in_exactness_band(const ProbabilityVector& probs, Label y,
                       double beta_tilde) {
  return std::fabs(probs.max_probability() - probs[y]) <= beta_tilde;
}

EstimatedScore estimated_score_classification(const ProbabilityVector& probs,
                                              double beta_tilde) {
  if (!(beta_tilde >= 0.0)) throw InvalidArgument("beta_tilde must be >= 0");
  // The predicted label is always in the band, so the result is well defined.
  Label best = probs.argmax();
  Score best_score = score_classification(probs, best);
  for (Label y = 0; y < probs.size(); ++y) {
    if (!in_exactness_band(probs, y, beta_tilde)) continue;
    const Score s = score_classification(probs, y);
    if (s > best_score) {
      best = y;
      best_score = s;
    }
  }
  return {best_score, best};
}

EstimatedScore estimated_score_regression(const RegressionOutput& /*y_hat*/,
                                          double beta_tilde) {
  if (!(beta_tilde >= 0.0) || !std::isfinite(beta_tilde)) {
    throw InvalidArgument("beta_tilde must be finite and >= 0");
  }
  return {beta_tilde, BoundaryPoint{beta_tilde}};
}

Calibrator calibrate_unlabeled(std::span<const ProbabilityVector> outputs,
                               const ExactnessSpec& exactness, double alpha) {
  if (outputs.empty()) throw InvalidArgument("empty calibration inputs");
  const AlphabetPtr& alphabet = outputs.front().alphabet();
  std::vector<Score> scores;
  scores.reserve(outputs.size());
  for (const auto& probs : outputs) {
    if (!same_alphabet(alphabet, probs.alphabet())) {
      throw InvalidArgument("calibration outputs use different alphabets");
    }
    scores.push_back(
        estimated_score_classification(probs, exactness.beta_tilde()).value);
  }
  return Calibrator::for_classification(alphabet, std::move(scores), alpha,
                                        exactness);
}

Calibrator calibrate_unlabeled(std::span<const RegressionOutput> outputs,
                               const ExactnessSpec& exactness, double alpha) {
  if (outputs.empty()) throw InvalidArgument("empty calibration inputs");
  const std::size_t dim = outputs.front().dimension();
  std::vector<Score> scores;
  scores.reserve(outputs.size());
  for (const auto& y_hat : outputs) {
    if (y_hat.dimension() != dim) {
      throw InvalidArgument("calibration outputs differ in dimension");
    }
    scores.push_back(
        estimated_score_regression(y_hat, exactness.beta_tilde()).value);
  }
  return Calibrator::for_regression(dim, std::move(scores), alpha, exactness);
}

Calibrator calibrate_unlabeled(std::span<const Features> inputs,
                               const Classifier& model,
                               const ExactnessSpec& exactness, double alpha) {
  if (inputs.empty()) throw InvalidArgument("empty calibration inputs");
  std::vector<ProbabilityVector> outputs;
  outputs.reserve(inputs.size());
  for (const auto& x : inputs) outputs.push_back(model.predict_proba(x));
  return calibrate_unlabeled(std::span<const ProbabilityVector>(outputs),
                             exactness, alpha);
}

Calibrator calibrate_unlabeled(std::span<const Features> inputs,
                               const Regressor& model,
                               const ExactnessSpec& exactness, double alpha) {
  if (inputs.empty()) throw InvalidArgument("empty calibration inputs");
  std::vector<RegressionOutput> outputs;
  outputs.reserve(inputs.size());
  for (const auto& x : inputs) outputs.push_back(model.predict(x));
  return calibrate_unlabeled(std::span<const RegressionOutput>(outputs),
                             exactness, alpha);
}

double guarantee_bound(double alpha, const ExactnessSpec& exactness) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgument("alpha must lie in (0, 1)");
  }
  return std::max(0.0, 1.0 - alpha - exactness.beta());
}

}  // namespace ucp
