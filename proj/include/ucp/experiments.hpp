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

#ifndef UCP_EXPERIMENTS_HPP_
#define UCP_EXPERIMENTS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ucp/calibration.hpp"
#include "ucp/persons.hpp"
#include "ucp/scores.hpp"
#include "ucp/synthetic.hpp"

namespace ucp {

struct SplitSpec {
  std::size_t n_train = 6000;
  std::size_t n_calib = 1000;
  std::size_t n_test = 3000;
  std::uint64_t seed = 0;
};

struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> calib;
  std::vector<std::size_t> test;
};

// Seeded Fisher-Yates permutation of [0, total) cut into the three parts.
SplitIndices split_indices(std::size_t total, const SplitSpec& split);

struct CoverageReport {
  std::string method;
  double empirical_coverage = 0.0;
  double mean_set_size = 0.0;
  double bound = 0.0;
  std::size_t n_test = 0;
  std::size_t trials = 0;
  std::vector<double> per_trial_coverage;
  std::vector<double> per_trial_set_size;
};

// Fills the mean fields from the per-trial vectors.
void finalize(CoverageReport& report);

struct IllustrationReport {
  SplitSpec split;
  double alpha = 0.0;
  std::size_t k = 0;
  double accuracy = 0.0;
  double beta = 0.0;  // 1 - accuracy unless overridden
  ConformalQuantile q;
  ConformalQuantile q_hat;
  CoverageReport labeled;
  CoverageReport unlabeled;

  bool bound_held() const {
    return unlabeled.empirical_coverage >= unlabeled.bound;
  }
};

// Fits kNN on the train split, estimates accuracy on the calibration split,
// calibrates with and without its labels and evaluates both on the test
// split. `beta_override` replaces the measured 1 - accuracy.
IllustrationReport run_illustration(std::span<const PersonRecord> dataset,
                                    const SplitSpec& split, double alpha,
                                    std::size_t k,
                                    std::optional<double> beta_override = {});

enum class TaskKind { kClassification, kRegression };

struct MonteCarloConfig {
  TaskKind task = TaskKind::kClassification;
  double alpha = 0.05;
  // Regression: target failure probability for beta_tilde estimation.
  double beta = 0.2;
  // Classification band width (0 gives the accuracy-based exactness).
  double beta_tilde = 0.0;
  std::size_t n_train = 2000;
  std::size_t n_holdout = 1000;
  std::size_t n_calib = 1000;
  std::size_t n_test = 2000;
  std::size_t trials = 200;
  std::size_t k = 25;
  std::uint64_t seed = 0;
  BlobConfig blobs;
  RegressionConfig regression;
};

struct TrialRecord {
  std::size_t trial = 0;
  double beta_hat = 0.0;  // classification: holdout error rate
  double beta_tilde = 0.0;
  double bound = 0.0;
  ConformalQuantile q;
  ConformalQuantile q_hat;
  double labeled_coverage = 0.0;
  double unlabeled_coverage = 0.0;
  double labeled_set_size = 0.0;
  double unlabeled_set_size = 0.0;
  std::size_t dominated_points = 0;  // calibration points with s_hat >= s
  bool q_hat_dominates = false;
};

struct MonteCarloReport {
  MonteCarloConfig config;
  CoverageReport labeled;
  CoverageReport unlabeled;
  std::vector<TrialRecord> trials;
  double mean_beta_hat = 0.0;
  // Pooled fraction of calibration points with s_hat >= s.
  double score_dominance = 0.0;
  // Fraction of trials with q_hat >= q.
  double quantile_dominance = 0.0;
};

// Fits one model per run, then for each trial draws a fresh holdout,
// calibration and test sample from the trial's own stream
// derive_seed(seed, trial + 1). Trials run in parallel; the result does
// not depend on scheduling.
MonteCarloReport monte_carlo_coverage(const MonteCarloConfig& config);

// Three-sigma binomial slack 3 sqrt(p (1 - p) / trials).
double three_sigma_slack(double p, std::size_t trials);

// Calls fn(i) for i in [0, count) on up to hardware_concurrency threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace ucp

#endif  // UCP_EXPERIMENTS_HPP_
