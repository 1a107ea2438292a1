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
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace ucp {

Standardizer::Standardizer(std::vector<double> mean, std::vector<double> scale)
    : mean_(std::move(mean)), scale_(std::move(scale)) {
  if (mean_.size() != scale_.size()) {
    throw InvalidArgument("standardizer mean/scale size mismatch");
  }
  for (double s : scale_) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw InvalidArgument("standardizer scale must be positive and finite");
    }
  }
}

Standardizer Standardizer::fit(std::span<const Features> xs) {
  if (xs.empty()) throw InvalidArgument("cannot standardize an empty set");
  const std::size_t dim = xs.front().size();
  std::vector<double> mean(dim, 0.0), scale(dim, 0.0);
  for (const auto& x : xs) {
    for (std::size_t j = 0; j < dim; ++j) mean[j] += x[j];
  }
  for (double& m : mean) m /= static_cast<double>(xs.size());
  for (const auto& x : xs) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double d = x[j] - mean[j];
      scale[j] += d * d;
    }
  }
  for (double& s : scale) {
    s = std::sqrt(s / static_cast<double>(xs.size()));
    if (!(s > 1e-12)) s = 1.0;
  }
  return Standardizer(std::move(mean), std::move(scale));
}

Features Standardizer::apply(std::span<const double> x) const {
  if (x.size() != mean_.size()) {
    throw InvalidArgument("feature dimension " + std::to_string(x.size()) +
                          ", expected " + std::to_string(mean_.size()));
  }
  Features out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    out[j] = (x[j] - mean_[j]) / scale_[j];
  }
  return out;
}

std::vector<std::size_t> nearest_indices(std::span<const Features> points,
                                         std::span<const double> query,
                                         std::size_t k) {
  if (k == 0 || k > points.size()) {
    throw InvalidArgument("k must lie in [1, " + std::to_string(points.size()) +
                          "]");
  }
  std::vector<std::pair<double, std::size_t>> dist(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    double d2 = 0.0;
    for (std::size_t j = 0; j < query.size(); ++j) {
      const double d = p[j] - query[j];
      d2 += d * d;
    }
    dist[i] = {d2, i};
  }
  auto kth = dist.begin() + static_cast<std::ptrdiff_t>(k);
  std::partial_sort(dist.begin(), kth, dist.end());
  std::vector<std::size_t> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = dist[i].second;
  return out;
}

namespace {

template <typename Example>
void check_training(const std::vector<Example>& train, std::size_t k) {
  if (train.empty()) throw InvalidArgument("empty training set");
  if (k == 0) throw InvalidArgument("k must be positive");
  if (k > train.size()) {
    throw InvalidArgument("k = " + std::to_string(k) + " exceeds training size " +
                          std::to_string(train.size()));
  }
  const std::size_t dim = train.front().x.size();
  if (dim == 0) throw InvalidArgument("feature vectors must be non-empty");
  for (const auto& e : train) {
    if (e.x.size() != dim) throw InvalidArgument("feature dimensions differ");
  }
}

template <typename Example>
std::vector<Features> inputs_of(const std::vector<Example>& train) {
  std::vector<Features> xs;
  xs.reserve(train.size());
  for (const auto& e : train) xs.push_back(e.x);
  return xs;
}

template <typename Example>
std::vector<Features> scale_all(const std::vector<Example>& train,
                                const Standardizer& st) {
  std::vector<Features> xs;
  xs.reserve(train.size());
  for (const auto& e : train) xs.push_back(st.apply(e.x));
  return xs;
}

}  // namespace

KnnClassifier::KnnClassifier(AlphabetPtr alphabet,
                             std::vector<ClassificationExample> train,
                             std::size_t k)
    : KnnClassifier(alphabet, train, k,
                    train.empty() ? Standardizer()
                                  : Standardizer::fit(inputs_of(train))) {}

KnnClassifier::KnnClassifier(AlphabetPtr alphabet,
                             std::vector<ClassificationExample> train,
                             std::size_t k, Standardizer standardizer)
    : alphabet_(std::move(alphabet)),
      train_(std::move(train)),
      k_(k),
      standardizer_(std::move(standardizer)) {
  if (!alphabet_) throw InvalidArgument("classifier needs an alphabet");
  check_training(train_, k_);
  for (const auto& e : train_) {
    if (!alphabet_->contains(e.y)) {
      throw UnknownLabel("training label outside the alphabet");
    }
  }
  scaled_ = scale_all(train_, standardizer_);
}

ProbabilityVector KnnClassifier::predict_proba(std::span<const double> x) const {
  const Features q = standardizer_.apply(x);
  std::vector<double> probs(alphabet_->size(), 0.0);
  for (std::size_t i : nearest_indices(scaled_, q, k_)) probs[train_[i].y] += 1.0;
  for (double& p : probs) p /= static_cast<double>(k_);
  return ProbabilityVector(alphabet_, std::move(probs));
}

KnnRegressor::KnnRegressor(std::vector<RegressionExample> train, std::size_t k)
    : KnnRegressor(train, k,
                   train.empty() ? Standardizer()
                                 : Standardizer::fit(inputs_of(train))) {}

KnnRegressor::KnnRegressor(std::vector<RegressionExample> train, std::size_t k,
                           Standardizer standardizer)
    : train_(std::move(train)), k_(k), standardizer_(std::move(standardizer)) {
  check_training(train_, k_);
  out_dim_ = train_.front().y.dimension();
  for (const auto& e : train_) {
    if (e.y.dimension() != out_dim_) {
      throw InvalidArgument("training outputs differ in dimension");
    }
  }
  scaled_ = scale_all(train_, standardizer_);
}

RegressionOutput KnnRegressor::predict(std::span<const double> x) const {
  const Features q = standardizer_.apply(x);
  std::vector<double> sum(out_dim_, 0.0);
  for (std::size_t i : nearest_indices(scaled_, q, k_)) {
    for (std::size_t j = 0; j < out_dim_; ++j) sum[j] += train_[i].y[j];
  }
  for (double& v : sum) v /= static_cast<double>(k_);
  return RegressionOutput(std::move(sum));
}

ExactnessEstimate estimate_accuracy(const Classifier& model,
                                    std::span<const ClassificationExample> holdout,
                                    std::string source) {
  if (holdout.empty()) throw InvalidArgument("empty holdout");
  std::size_t correct = 0;
  for (const auto& e : holdout) {
    if (model.predict(e.x) == e.y) ++correct;
  }
  const double accuracy =
      static_cast<double>(correct) / static_cast<double>(holdout.size());
  return {ExactnessSpec(0.0, 1.0 - accuracy), std::move(source), holdout.size(),
          accuracy};
}

double lower_empirical_quantile(std::span<const double> values, double level) {
  if (values.empty()) throw InvalidArgument("empty sample");
  if (!(level > 0.0 && level <= 1.0)) {
    throw InvalidArgument("quantile level must lie in (0, 1]");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double x = static_cast<double>(sorted.size()) * level;
  auto rank = static_cast<std::size_t>(std::ceil(x - 1e-12 * x));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

ExactnessEstimate estimate_regression_exactness(
    const Regressor& model, std::span<const RegressionExample> holdout,
    double beta, std::string source) {
  if (holdout.empty()) throw InvalidArgument("empty holdout");
  if (!(beta > 0.0 && beta < 1.0)) {
    throw InvalidArgument("beta must lie in (0, 1)");
  }
  std::vector<double> errors;
  errors.reserve(holdout.size());
  for (const auto& e : holdout) {
    errors.push_back(l1_distance(e.y, model.predict(e.x)));
  }
  const double beta_tilde = lower_empirical_quantile(errors, 1.0 - beta);
  const auto covered = std::count_if(errors.begin(), errors.end(),
                                     [&](double e) { return e <= beta_tilde; });
  return {ExactnessSpec(beta_tilde, beta), std::move(source), holdout.size(),
          static_cast<double>(covered) / static_cast<double>(errors.size())};
}

// Text format, whitespace separated:
//   ucp-knn 1
//   task classification|regression
//   k <k>
//   dim <feature dim>
//   alphabet <m> <name>...          (classification)
//   output-dim <l>                  (regression)
//   mean <v>...
//   scale <v>...
//   train <N>
//   <x...> <label index | y...>     (N rows)
namespace {

void write_header(std::ostream& os, const char* task, std::size_t k,
                  const Standardizer& st) {
  os << "ucp-knn 1\n"
     << "task " << task << "\n"
     << "k " << k << "\n"
     << "dim " << st.dimension() << "\n";
}

void write_standardizer(std::ostream& os, const Standardizer& st) {
  os << "mean";
  for (double v : st.mean()) os << ' ' << v;
  os << "\nscale";
  for (double v : st.scale()) os << ' ' << v;
  os << '\n';
}

void expect(std::istream& is, const std::string& key) {
  std::string got;
  if (!(is >> got) || got != key) {
    throw InvalidArgument("model file: expected '" + key + "', got '" + got + "'");
  }
}

template <typename T>
T read(std::istream& is, const char* what) {
  T v;
  if (!(is >> v)) throw InvalidArgument(std::string("model file: bad ") + what);
  return v;
}

struct Header {
  std::size_t k;
  std::size_t dim;
};

Header read_header(std::istream& is, const std::string& task) {
  expect(is, "ucp-knn");
  if (read<int>(is, "version") != 1) {
    throw InvalidArgument("model file: unsupported version");
  }
  expect(is, "task");
  const auto t = read<std::string>(is, "task");
  if (t != task) {
    throw InvalidArgument("model file holds a " + t + " model, expected " + task);
  }
  expect(is, "k");
  Header h{read<std::size_t>(is, "k"), 0};
  expect(is, "dim");
  h.dim = read<std::size_t>(is, "dim");
  return h;
}

Standardizer read_standardizer(std::istream& is, std::size_t dim) {
  std::vector<double> mean(dim), scale(dim);
  expect(is, "mean");
  for (double& v : mean) v = read<double>(is, "mean");
  expect(is, "scale");
  for (double& v : scale) v = read<double>(is, "scale");
  return Standardizer(std::move(mean), std::move(scale));
}

}  // namespace

void save_model(std::ostream& os, const KnnClassifier& model) {
  const auto flags = os.flags();
  const auto prec = os.precision(17);
  write_header(os, "classification", model.k(), model.standardizer());
  os << "alphabet " << model.alphabet()->size();
  for (const auto& n : model.alphabet()->names()) os << ' ' << n;
  os << '\n';
  write_standardizer(os, model.standardizer());
  os << "train " << model.training_data().size() << '\n';
  for (const auto& e : model.training_data()) {
    for (double v : e.x) os << v << ' ';
    os << e.y << '\n';
  }
  os.precision(prec);
  os.flags(flags);
}

void save_model(std::ostream& os, const KnnRegressor& model) {
  const auto flags = os.flags();
  const auto prec = os.precision(17);
  write_header(os, "regression", model.k(), model.standardizer());
  os << "output-dim " << model.output_dimension() << '\n';
  write_standardizer(os, model.standardizer());
  os << "train " << model.training_data().size() << '\n';
  for (const auto& e : model.training_data()) {
    for (double v : e.x) os << v << ' ';
    for (std::size_t j = 0; j < e.y.dimension(); ++j) {
      os << (j ? " " : "") << e.y[j];
    }
    os << '\n';
  }
  os.precision(prec);
  os.flags(flags);
}

KnnClassifier load_classifier(std::istream& is) {
  const Header h = read_header(is, "classification");
  expect(is, "alphabet");
  const auto m = read<std::size_t>(is, "alphabet size");
  std::vector<std::string> names(m);
  for (auto& n : names) n = read<std::string>(is, "label");
  auto alphabet = std::make_shared<const Alphabet>(std::move(names));
  Standardizer st = read_standardizer(is, h.dim);
  expect(is, "train");
  const auto rows = read<std::size_t>(is, "train size");
  std::vector<ClassificationExample> train(rows);
  for (auto& e : train) {
    e.x.resize(h.dim);
    for (double& v : e.x) v = read<double>(is, "feature");
    e.y = read<std::size_t>(is, "label index");
  }
  return KnnClassifier(std::move(alphabet), std::move(train), h.k, std::move(st));
}

KnnRegressor load_regressor(std::istream& is) {
  const Header h = read_header(is, "regression");
  expect(is, "output-dim");
  const auto l = read<std::size_t>(is, "output-dim");
  Standardizer st = read_standardizer(is, h.dim);
  expect(is, "train");
  const auto rows = read<std::size_t>(is, "train size");
  std::vector<RegressionExample> train;
  train.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    Features x(h.dim);
    for (double& v : x) v = read<double>(is, "feature");
    std::vector<double> y(l);
    for (double& v : y) v = read<double>(is, "output");
    train.push_back({std::move(x), RegressionOutput(std::move(y))});
  }
  return KnnRegressor(std::move(train), h.k, std::move(st));
}

}  // namespace ucp
