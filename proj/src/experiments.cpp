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

#include "ucp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "ucp/models.hpp"
#include "ucp/rng.hpp"
#include "ucp/unlabeled.hpp"

namespace ucp {

SplitIndices split_indices(std::size_t total, const SplitSpec& split) {
  if (split.n_train == 0 || split.n_calib == 0 || split.n_test == 0) {
    throw InvalidArgument("split sizes must be positive");
  }
  const std::size_t need = split.n_train + split.n_calib + split.n_test;
  if (need > total) {
    throw InvalidArgument("split needs " + std::to_string(need) +
                          " records, dataset has " + std::to_string(total));
  }
  std::vector<std::size_t> perm(total);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rng rng(split.seed);
  rng.shuffle(std::span<std::size_t>(perm));
  SplitIndices out;
  auto it = perm.begin();
  out.train.assign(it, it + static_cast<std::ptrdiff_t>(split.n_train));
  it += static_cast<std::ptrdiff_t>(split.n_train);
  out.calib.assign(it, it + static_cast<std::ptrdiff_t>(split.n_calib));
  it += static_cast<std::ptrdiff_t>(split.n_calib);
  out.test.assign(it, it + static_cast<std::ptrdiff_t>(split.n_test));
  return out;
}

void finalize(CoverageReport& report) {
  report.trials = report.per_trial_coverage.size();
  if (report.trials == 0) return;
  const double n = static_cast<double>(report.trials);
  report.empirical_coverage = std::accumulate(report.per_trial_coverage.begin(),
                                              report.per_trial_coverage.end(),
                                              0.0) / n;
  report.mean_set_size = std::accumulate(report.per_trial_set_size.begin(),
                                         report.per_trial_set_size.end(), 0.0) /
                         n;
}

namespace {

struct SetStats {
  double coverage;
  double mean_size;
};

SetStats evaluate_sets(const Calibrator& calibrator,
                       std::span<const ProbabilityVector> probs,
                       std::span<const Label> truth) {
  std::size_t covered = 0;
  std::size_t total_size = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const PredictionSet set = prediction_set(calibrator, probs[i]);
    covered += set.contains(truth[i]) ? 1 : 0;
    total_size += set.size();
  }
  const double n = static_cast<double>(probs.size());
  return {static_cast<double>(covered) / n, static_cast<double>(total_size) / n};
}

SetStats evaluate_intervals(const Calibrator& calibrator,
                            std::span<const RegressionOutput> predictions,
                            std::span<const RegressionOutput> truth) {
  std::size_t covered = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    covered += prediction_interval(calibrator, predictions[i]).contains(truth[i]);
  }
  // Interval length for l = 1; for l > 1 the same 2q is the l1-ball diameter.
  return {static_cast<double>(covered) / static_cast<double>(predictions.size()),
          2.0 * calibrator.q()};
}

}  // namespace

IllustrationReport run_illustration(std::span<const PersonRecord> dataset,
                                    const SplitSpec& split, double alpha,
                                    std::size_t k,
                                    std::optional<double> beta_override) {
  conformal_rank(1, alpha);  // validates alpha
  const SplitIndices parts = split_indices(dataset.size(), split);

  std::vector<ClassificationExample> train;
  train.reserve(parts.train.size());
  std::set<Label> train_labels;
  for (std::size_t i : parts.train) {
    train.push_back(person_example(dataset[i]));
    train_labels.insert(train.back().y);
  }
  if (train_labels.size() < 2) {
    throw InvalidArgument("training split contains a single class");
  }
  const KnnClassifier model(weight_class_alphabet(), std::move(train), k);

  std::vector<ClassificationExample> calib;
  for (std::size_t i : parts.calib) calib.push_back(person_example(dataset[i]));
  std::vector<ProbabilityVector> calib_probs;
  for (const auto& e : calib) calib_probs.push_back(model.predict_proba(e.x));

  IllustrationReport report;
  report.split = split;
  report.alpha = alpha;
  report.k = k;
  const ExactnessEstimate accuracy = estimate_accuracy(model, calib, "calibration split");
  report.accuracy = accuracy.holdout_fraction;
  report.beta = beta_override.value_or(accuracy.spec.beta());
  const ExactnessSpec exactness(0.0, report.beta);

  std::vector<Score> true_scores;
  for (std::size_t i = 0; i < calib.size(); ++i) {
    true_scores.push_back(score_classification(calib_probs[i], calib[i].y));
  }
  const Calibrator labeled = Calibrator::for_classification(
      weight_class_alphabet(), std::move(true_scores), alpha);
  const Calibrator unlabeled = calibrate_unlabeled(
      std::span<const ProbabilityVector>(calib_probs), exactness, alpha);
  report.q = labeled.quantile();
  report.q_hat = unlabeled.quantile();

  std::vector<ProbabilityVector> test_probs;
  std::vector<Label> test_truth;
  for (std::size_t i : parts.test) {
    const auto e = person_example(dataset[i]);
    test_probs.push_back(model.predict_proba(e.x));
    test_truth.push_back(e.y);
  }

  auto fill = [&](CoverageReport& r, const char* method, const Calibrator& c) {
    const SetStats s = evaluate_sets(c, test_probs, test_truth);
    r.method = method;
    r.bound = c.guarantee();
    r.n_test = test_probs.size();
    r.per_trial_coverage = {s.coverage};
    r.per_trial_set_size = {s.mean_size};
    finalize(r);
  };
  fill(report.labeled, "labeled", labeled);
  fill(report.unlabeled, "unlabeled", unlabeled);
  return report;
}

double three_sigma_slack(double p, std::size_t trials) {
  if (trials == 0) throw InvalidArgument("trials must be positive");
  return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(
      count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

namespace {

TrialRecord classification_trial(const MonteCarloConfig& config,
                                 const KnnClassifier& model, std::size_t trial) {
  Rng rng(derive_seed(config.seed, trial + 1));
  const auto holdout = generate_blobs(config.blobs, config.n_holdout, rng);
  const auto calib = generate_blobs(config.blobs, config.n_calib, rng);
  const auto test = generate_blobs(config.blobs, config.n_test, rng);

  TrialRecord rec;
  rec.trial = trial;
  rec.beta_hat = estimate_accuracy(model, holdout).spec.beta();
  rec.beta_tilde = config.beta_tilde;
  const ExactnessSpec exactness(config.beta_tilde, rec.beta_hat);
  rec.bound = guarantee_bound(config.alpha, exactness);

  std::vector<ProbabilityVector> calib_probs;
  std::vector<Score> true_scores;
  for (const auto& e : calib) {
    calib_probs.push_back(model.predict_proba(e.x));
    true_scores.push_back(score_classification(calib_probs.back(), e.y));
  }
  const Calibrator unlabeled = calibrate_unlabeled(
      std::span<const ProbabilityVector>(calib_probs), exactness, config.alpha);
  for (std::size_t i = 0; i < calib.size(); ++i) {
    if (unlabeled.scores()[i] >= true_scores[i]) ++rec.dominated_points;
  }
  const Calibrator labeled = Calibrator::for_classification(
      model.alphabet(), std::move(true_scores), config.alpha);
  rec.q = labeled.quantile();
  rec.q_hat = unlabeled.quantile();
  rec.q_hat_dominates = rec.q_hat.value >= rec.q.value;

  std::vector<ProbabilityVector> test_probs;
  std::vector<Label> truth;
  for (const auto& e : test) {
    test_probs.push_back(model.predict_proba(e.x));
    truth.push_back(e.y);
  }
  const SetStats ls = evaluate_sets(labeled, test_probs, truth);
  const SetStats us = evaluate_sets(unlabeled, test_probs, truth);
  rec.labeled_coverage = ls.coverage;
  rec.labeled_set_size = ls.mean_size;
  rec.unlabeled_coverage = us.coverage;
  rec.unlabeled_set_size = us.mean_size;
  return rec;
}

TrialRecord regression_trial(const MonteCarloConfig& config,
                             const KnnRegressor& model, std::size_t trial) {
  Rng rng(derive_seed(config.seed, trial + 1));
  const auto holdout = generate_regression(config.regression, config.n_holdout, rng);
  const auto calib = generate_regression(config.regression, config.n_calib, rng);
  const auto test = generate_regression(config.regression, config.n_test, rng);

  TrialRecord rec;
  rec.trial = trial;
  const ExactnessEstimate est =
      estimate_regression_exactness(model, holdout, config.beta);
  const ExactnessSpec& exactness = est.spec;
  rec.beta_hat = exactness.beta();
  rec.beta_tilde = exactness.beta_tilde();
  rec.bound = guarantee_bound(config.alpha, exactness);

  std::vector<RegressionOutput> calib_pred;
  std::vector<Score> true_scores;
  for (const auto& e : calib) {
    calib_pred.push_back(model.predict(e.x));
    true_scores.push_back(score_regression(e.y, calib_pred.back()));
  }
  const Calibrator unlabeled = calibrate_unlabeled(
      std::span<const RegressionOutput>(calib_pred), exactness, config.alpha);
  for (std::size_t i = 0; i < calib.size(); ++i) {
    if (unlabeled.scores()[i] >= true_scores[i]) ++rec.dominated_points;
  }
  const Calibrator labeled = Calibrator::for_regression(
      model.output_dimension(), std::move(true_scores), config.alpha);
  rec.q = labeled.quantile();
  rec.q_hat = unlabeled.quantile();
  rec.q_hat_dominates = rec.q_hat.value >= rec.q.value;

  std::vector<RegressionOutput> test_pred;
  std::vector<RegressionOutput> truth;
  for (const auto& e : test) {
    test_pred.push_back(model.predict(e.x));
    truth.push_back(e.y);
  }
  const SetStats ls = evaluate_intervals(labeled, test_pred, truth);
  const SetStats us = evaluate_intervals(unlabeled, test_pred, truth);
  rec.labeled_coverage = ls.coverage;
  rec.labeled_set_size = ls.mean_size;
  rec.unlabeled_coverage = us.coverage;
  rec.unlabeled_set_size = us.mean_size;
  return rec;
}

}  // namespace

MonteCarloReport monte_carlo_coverage(const MonteCarloConfig& config) {
  if (config.trials == 0) throw InvalidArgument("trials must be >= 1");
  if (config.n_calib == 0 || config.n_test == 0 || config.n_holdout == 0 ||
      config.n_train == 0) {
    throw InvalidArgument("sample sizes must be positive");
  }
  conformal_rank(1, config.alpha);

  MonteCarloReport report;
  report.config = config;
  report.trials.resize(config.trials);
  Rng model_rng(derive_seed(config.seed, 0));

  if (config.task == TaskKind::kClassification) {
    const KnnClassifier model(blob_alphabet(config.blobs),
                              generate_blobs(config.blobs, config.n_train, model_rng),
                              config.k);
    parallel_for(config.trials, [&](std::size_t t) {
      report.trials[t] = classification_trial(config, model, t);
    });
  } else {
    const KnnRegressor model(
        generate_regression(config.regression, config.n_train, model_rng),
        config.k);
    parallel_for(config.trials, [&](std::size_t t) {
      report.trials[t] = regression_trial(config, model, t);
    });
  }

  report.labeled.method = "labeled";
  report.unlabeled.method = "unlabeled";
  std::size_t dominated = 0;
  std::size_t q_dominated = 0;
  double beta_sum = 0.0;
  double bound_sum = 0.0;
  for (const auto& r : report.trials) {
    report.labeled.per_trial_coverage.push_back(r.labeled_coverage);
    report.labeled.per_trial_set_size.push_back(r.labeled_set_size);
    report.unlabeled.per_trial_coverage.push_back(r.unlabeled_coverage);
    report.unlabeled.per_trial_set_size.push_back(r.unlabeled_set_size);
    dominated += r.dominated_points;
    q_dominated += r.q_hat_dominates ? 1 : 0;
    beta_sum += r.beta_hat;
    bound_sum += r.bound;
  }
  const double trials = static_cast<double>(config.trials);
  report.mean_beta_hat = beta_sum / trials;
  report.labeled.bound = 1.0 - config.alpha;
  report.unlabeled.bound = bound_sum / trials;
  report.labeled.n_test = report.unlabeled.n_test = config.n_test;
  finalize(report.labeled);
  finalize(report.unlabeled);
  report.score_dominance =
      static_cast<double>(dominated) / (trials * static_cast<double>(config.n_calib));
  report.quantile_dominance = static_cast<double>(q_dominated) / trials;
  return report;
}

}  // namespace ucp
