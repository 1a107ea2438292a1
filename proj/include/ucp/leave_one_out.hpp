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

#ifndef UCP_LEAVE_ONE_OUT_HPP_
#define UCP_LEAVE_ONE_OUT_HPP_

#include <span>
#include <vector>

#include "ucp/calibration.hpp"
#include "ucp/model.hpp"
#include "ucp/scores.hpp"

namespace ucp {

// For each i, the conformal quantile of all scores except scores[i].
// Runs in O(n log n) from a single sort.
std::vector<ConformalQuantile> leave_one_out_quantiles(
    std::span<const Score> scores, double alpha);

struct LooSet {
  ConformalQuantile q_hat;
  PredictionSet set;
};

struct LooInterval {
  ConformalQuantile q_hat;
  PredictionInterval interval;
};

// Unlabeled prediction sets for a test batch with no calibration split:
// point i is calibrated on the estimated scores of the other points.
std::vector<LooSet> leave_one_out(std::span<const ProbabilityVector> outputs,
                                  const ExactnessSpec& exactness, double alpha);
std::vector<LooInterval> leave_one_out(std::span<const RegressionOutput> outputs,
                                       const ExactnessSpec& exactness,
                                       double alpha);

std::vector<LooSet> leave_one_out(std::span<const Features> inputs,
                                  const Classifier& model,
                                  const ExactnessSpec& exactness, double alpha);
std::vector<LooInterval> leave_one_out(std::span<const Features> inputs,
                                       const Regressor& model,
                                       const ExactnessSpec& exactness,
                                       double alpha);

}  // namespace ucp

#endif  // UCP_LEAVE_ONE_OUT_HPP_
