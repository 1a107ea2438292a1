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

#include "ucp/leave_one_out.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ucp/unlabeled.hpp"

namespace ucp {

std::vector<ConformalQuantile> leave_one_out_quantiles(
    std::span<const Score> scores, double alpha) {
  const std::size_t n = scores.size();
  if (n < 2) throw InvalidArgument("leave-one-out needs at least 2 inputs");
  for (Score s : scores) {
    if (!std::isfinite(s)) throw InvalidArgument("non-finite score");
  }
  const std::size_t rank = conformal_rank(n - 1, alpha);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b] || (scores[a] == scores[b] && a < b);
  });
  std::vector<std::size_t> position(n);
  for (std::size_t p = 0; p < n; ++p) position[order[p]] = p;

  std::vector<ConformalQuantile> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    ConformalQuantile& q = out[i];
    q.n = n - 1;
    q.alpha = alpha;
    q.rank = rank;
    if (rank > n - 1) {
      q.value = kInfiniteScore;
      continue;
    }
    // The rank-th smallest of the others sits one slot further right once
    // point i, at or before that slot, is removed.
    const std::size_t slot = position[i] < rank ? rank : rank - 1;
    q.value = scores[order[slot]];
  }
  return out;
}

std::vector<LooSet> leave_one_out(std::span<const ProbabilityVector> outputs,
                                  const ExactnessSpec& exactness, double alpha) {
  if (outputs.size() < 2) throw InvalidArgument("leave-one-out needs at least 2 inputs");
  std::vector<Score> estimated;
  estimated.reserve(outputs.size());
  for (const auto& p : outputs) {
    if (!same_alphabet(p.alphabet(), outputs.front().alphabet())) {
      throw InvalidArgument("test outputs use different alphabets");
    }
    estimated.push_back(
        estimated_score_classification(p, exactness.beta_tilde()).value);
  }
  const auto quantiles = leave_one_out_quantiles(estimated, alpha);
  std::vector<LooSet> out;
  out.reserve(outputs.size());
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    const Calibrator c = Calibrator::restore(ScoreKind::kClassification,
                                             quantiles[i], outputs[i].alphabet(),
                                             0, exactness);
    out.push_back({quantiles[i], prediction_set(c, outputs[i])});
  }
  return out;
}

std::vector<LooInterval> leave_one_out(std::span<const RegressionOutput> outputs,
                                       const ExactnessSpec& exactness,
                                       double alpha) {
  if (outputs.size() < 2) throw InvalidArgument("leave-one-out needs at least 2 inputs");
  std::vector<Score> estimated;
  estimated.reserve(outputs.size());
  for (const auto& y_hat : outputs) {
    if (y_hat.dimension() != outputs.front().dimension()) {
      throw InvalidArgument("test outputs differ in dimension");
    }
    estimated.push_back(
        estimated_score_regression(y_hat, exactness.beta_tilde()).value);
  }
  const auto quantiles = leave_one_out_quantiles(estimated, alpha);
  std::vector<LooInterval> out;
  out.reserve(outputs.size());
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    out.push_back({quantiles[i], PredictionInterval{outputs[i], quantiles[i].value}});
  }
  return out;
}

std::vector<LooSet> leave_one_out(std::span<const Features> inputs,
                                  const Classifier& model,
                                  const ExactnessSpec& exactness, double alpha) {
  std::vector<ProbabilityVector> outputs;
  outputs.reserve(inputs.size());
  for (const auto& x : inputs) outputs.push_back(model.predict_proba(x));
  return leave_one_out(std::span<const ProbabilityVector>(outputs), exactness,
                       alpha);
}

std::vector<LooInterval> leave_one_out(std::span<const Features> inputs,
                                       const Regressor& model,
                                       const ExactnessSpec& exactness,
                                       double alpha) {
  std::vector<RegressionOutput> outputs;
  outputs.reserve(inputs.size());
  for (const auto& x : inputs) outputs.push_back(model.predict(x));
  return leave_one_out(std::span<const RegressionOutput>(outputs), exactness,
                       alpha);
}

}  // namespace ucp
