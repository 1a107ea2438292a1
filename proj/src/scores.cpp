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

#include "ucp/scores.hpp"

#include <cmath>
#include <set>

namespace ucp {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidArgument("alphabet must not be empty");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidArgument("alphabet contains an empty label");
    if (!seen.insert(n).second) {
      throw InvalidArgument("duplicate label '" + n + "' in alphabet");
    }
  }
}

const std::string& Alphabet::name(Label label) const {
  if (!contains(label)) {
    throw UnknownLabel("label index " + std::to_string(label) +
                       " outside alphabet of size " +
                       std::to_string(names_.size()));
  }
  return names_[label];
}

Label Alphabet::find(const std::string& name) const {
  for (Label i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw UnknownLabel("label '" + name + "' not in alphabet");
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  return a && b && *a == *b;
}

ProbabilityVector::ProbabilityVector(AlphabetPtr alphabet,
                                     std::vector<double> probs)
    : alphabet_(std::move(alphabet)), probs_(std::move(probs)) {
  if (!alphabet_) throw InvalidArgument("probability vector needs an alphabet");
  if (probs_.size() != alphabet_->size()) {
    throw InvalidArgument("probability vector has " +
                          std::to_string(probs_.size()) +
                          " entries for an alphabet of size " +
                          std::to_string(alphabet_->size()));
  }
  double sum = 0.0;
  for (Label i = 0; i < probs_.size(); ++i) {
    const double p = probs_[i];
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      throw InvalidArgument("probability for '" + alphabet_->name(i) +
                            "' outside [0,1]");
    }
    sum += p;
    if (p > probs_[argmax_]) argmax_ = i;
  }
  if (std::fabs(sum - 1.0) > kProbabilityTolerance) {
    throw InvalidArgument("probabilities sum to " + std::to_string(sum) +
                          ", expected 1");
  }
}

double ProbabilityVector::operator[](Label label) const {
  if (label >= probs_.size()) {
    throw UnknownLabel("label index " + std::to_string(label) +
                       " outside the model's alphabet");
  }
  return probs_[label];
}

Label ProbabilityVector::argmax() const { return argmax_; }

RegressionOutput::RegressionOutput(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw InvalidArgument("regression output must have dimension >= 1");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw InvalidArgument("regression output has a non-finite component");
    }
  }
}

double l1_distance(const RegressionOutput& a, const RegressionOutput& b) {
  if (a.dimension() != b.dimension()) {
    throw InvalidArgument("dimension mismatch: " +
                          std::to_string(a.dimension()) + " vs " +
                          std::to_string(b.dimension()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) sum += std::fabs(a[i] - b[i]);
  return sum;
}

Score score_classification(const ProbabilityVector& probs, Label y) {
  return 1.0 - probs[y];
}

Score score_regression(const RegressionOutput& y,
                       const RegressionOutput& y_hat) {
  return l1_distance(y, y_hat);
}

ExactnessSpec::ExactnessSpec(double beta_tilde, double beta)
    : beta_tilde_(beta_tilde), beta_(beta) {
  if (!(beta_tilde >= 0.0) || !std::isfinite(beta_tilde)) {
    throw InvalidArgument("beta_tilde must be finite and >= 0");
  }
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw InvalidArgument("beta must lie in [0, 1)");
  }
}

}  // namespace ucp
