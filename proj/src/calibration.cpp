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
#include <cmath>
#include <string>

#include "ucp/unlabeled.hpp"

namespace ucp {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgument("alpha must lie in (0, 1), got " +
                          std::to_string(alpha));
  }
}

}  // namespace

std::size_t conformal_rank(std::size_t n, double alpha) {
  check_alpha(alpha);
  const double x = static_cast<double>(n + 1) * (1.0 - alpha);
  return static_cast<std::size_t>(std::ceil(x - 1e-12 * x));
}

ConformalQuantile conformal_quantile(std::span<const Score> scores,
                                     double alpha) {
  check_alpha(alpha);
  if (scores.empty()) throw InvalidArgument("no calibration scores");
  for (Score s : scores) {
    if (!std::isfinite(s)) throw InvalidArgument("non-finite calibration score");
  }
  ConformalQuantile out;
  out.n = scores.size();
  out.alpha = alpha;
  out.rank = conformal_rank(out.n, alpha);
  if (out.rank > out.n) {
    out.value = kInfiniteScore;
    return out;
  }
  std::vector<Score> work(scores.begin(), scores.end());
  auto kth = work.begin() + static_cast<std::ptrdiff_t>(out.rank - 1);
  std::nth_element(work.begin(), kth, work.end());
  out.value = *kth;
  return out;
}

const char* to_string(ScoreKind kind) {
  return kind == ScoreKind::kClassification ? "classification" : "regression";
}

Calibrator Calibrator::for_classification(
    AlphabetPtr alphabet, std::vector<Score> scores, double alpha,
    std::optional<ExactnessSpec> exactness) {
  if (!alphabet) throw InvalidArgument("classification calibrator needs an alphabet");
  Calibrator c;
  c.kind_ = ScoreKind::kClassification;
  c.quantile_ = conformal_quantile(scores, alpha);
  c.scores_ = std::move(scores);
  c.alphabet_ = std::move(alphabet);
  c.exactness_ = exactness;
  return c;
}

Calibrator Calibrator::for_regression(std::size_t dimension,
                                      std::vector<Score> scores, double alpha,
                                      std::optional<ExactnessSpec> exactness) {
  if (dimension == 0) throw InvalidArgument("regression dimension must be >= 1");
  Calibrator c;
  c.kind_ = ScoreKind::kRegression;
  c.quantile_ = conformal_quantile(scores, alpha);
  c.scores_ = std::move(scores);
  c.dimension_ = dimension;
  c.exactness_ = exactness;
  return c;
}

Calibrator Calibrator::restore(ScoreKind kind, ConformalQuantile quantile,
                               AlphabetPtr alphabet, std::size_t dimension,
                               std::optional<ExactnessSpec> exactness) {
  check_alpha(quantile.alpha);
  if (quantile.n == 0) throw InvalidArgument("calibration count must be >= 1");
  if (quantile.rank != conformal_rank(quantile.n, quantile.alpha)) {
    throw InvalidArgument("stored rank inconsistent with n and alpha");
  }
  if ((quantile.rank > quantile.n) != quantile.infinite()) {
    throw InvalidArgument("stored quantile inconsistent with its rank");
  }
  if (!quantile.infinite() && !(quantile.value >= 0.0)) {
    throw InvalidArgument("quantile value must be non-negative");
  }
  Calibrator c;
  c.kind_ = kind;
  c.quantile_ = quantile;
  c.exactness_ = exactness;
  if (kind == ScoreKind::kClassification) {
    if (!alphabet) throw InvalidArgument("classification calibrator needs an alphabet");
    c.alphabet_ = std::move(alphabet);
  } else {
    if (dimension == 0) throw InvalidArgument("regression dimension must be >= 1");
    c.dimension_ = dimension;
  }
  return c;
}

double Calibrator::guarantee() const {
  if (exactness_) return guarantee_bound(alpha(), *exactness_);
  return 1.0 - alpha();
}

double Calibrator::probability_threshold() const {
  return std::max(0.0, 1.0 - q());
}

bool PredictionSet::contains(Label y) const {
  return std::binary_search(labels.begin(), labels.end(), y);
}

bool PredictionInterval::contains(const RegressionOutput& y) const {
  return l1_distance(y, center) <= radius;
}

Calibrator calibrate_labeled(std::span<const ClassificationExample> pairs,
                             const Classifier& model, double alpha) {
  if (pairs.empty()) throw InvalidArgument("empty calibration set");
  std::vector<Score> scores;
  scores.reserve(pairs.size());
  for (const auto& p : pairs) {
    scores.push_back(score_classification(model.predict_proba(p.x), p.y));
  }
  return Calibrator::for_classification(model.alphabet(), std::move(scores),
                                        alpha);
}

Calibrator calibrate_labeled(std::span<const RegressionExample> pairs,
                             const Regressor& model, double alpha) {
  if (pairs.empty()) throw InvalidArgument("empty calibration set");
  std::vector<Score> scores;
  scores.reserve(pairs.size());
  for (const auto& p : pairs) {
    scores.push_back(score_regression(p.y, model.predict(p.x)));
  }
  return Calibrator::for_regression(model.output_dimension(), std::move(scores),
                                    alpha);
}

PredictionSet prediction_set(const Calibrator& calibrator,
                             const ProbabilityVector& probs) {
  if (calibrator.kind() != ScoreKind::kClassification) {
    throw InvalidArgument("prediction_set needs a classification calibrator");
  }
  if (!same_alphabet(calibrator.alphabet(), probs.alphabet())) {
    throw InvalidArgument("alphabet mismatch between calibrator and probabilities");
  }
  PredictionSet out;
  out.alphabet = calibrator.alphabet();
  out.threshold = calibrator.quantile();
  for (Label y = 0; y < probs.size(); ++y) {
    if (score_classification(probs, y) <= calibrator.q()) out.labels.push_back(y);
  }
  return out;
}

PredictionInterval prediction_interval(const Calibrator& calibrator,
                                       const RegressionOutput& y_hat) {
  if (calibrator.kind() != ScoreKind::kRegression) {
    throw InvalidArgument("prediction_interval needs a regression calibrator");
  }
  if (y_hat.dimension() != calibrator.dimension()) {
    throw InvalidArgument("prediction dimension differs from calibrator");
  }
  return PredictionInterval{y_hat, calibrator.q()};
}

}  // namespace ucp
