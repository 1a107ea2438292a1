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

#ifndef UCP_SCORES_HPP_
#define UCP_SCORES_HPP_

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ucp {

// Raised for any malformed argument: out-of-range parameters, bad
// probability vectors, dimension mismatches.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A label outside the alphabet the model was built for.
class UnknownLabel : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Index into an Alphabet.
using Label = std::size_t;

// Nonconformity score; larger means worse agreement.
using Score = double;

// Finite, ordered set of distinct class names.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);
  Alphabet(std::initializer_list<std::string> names)
      : Alphabet(std::vector<std::string>(names)) {}

  std::size_t size() const { return names_.size(); }
  const std::string& name(Label label) const;
  Label find(const std::string& name) const;
  bool contains(Label label) const { return label < names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

// Class probabilities over a fixed alphabet. Entries lie in [0,1] and sum
// to one within kProbabilityTolerance; inputs violating this are rejected,
// never renormalized.
class ProbabilityVector {
 public:
  static constexpr double kProbabilityTolerance = 1e-9;

  ProbabilityVector(AlphabetPtr alphabet, std::vector<double> probs);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::size_t size() const { return probs_.size(); }
  std::span<const double> values() const { return probs_; }
  double operator[](Label label) const;

  // First label (in alphabet order) attaining the maximum probability.
  Label argmax() const;
  double max_probability() const { return probs_[argmax_]; }

 private:
  AlphabetPtr alphabet_;
  std::vector<double> probs_;
  Label argmax_ = 0;
};

// Point in R^l, l >= 1, all components finite.
class RegressionOutput {
 public:
  RegressionOutput(std::initializer_list<double> values)
      : RegressionOutput(std::vector<double>(values)) {}
  explicit RegressionOutput(std::vector<double> values);

  std::size_t dimension() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const RegressionOutput&,
                         const RegressionOutput&) = default;

 private:
  std::vector<double> values_;
};

// Sum of absolute componentwise differences.
double l1_distance(const RegressionOutput& a, const RegressionOutput& b);

// s(x, y) = 1 - p_y(x).
Score score_classification(const ProbabilityVector& probs, Label y);

// s(x, y) = d_1(y, y_hat).
Score score_regression(const RegressionOutput& y, const RegressionOutput& y_hat);

// (beta_tilde, beta) pair: with probability at least 1 - beta the true
// output scores within beta_tilde of the model's own prediction.
class ExactnessSpec {
 public:
  ExactnessSpec(double beta_tilde, double beta);

  double beta_tilde() const { return beta_tilde_; }
  double beta() const { return beta_; }

 private:
  double beta_tilde_;
  double beta_;
};

}  // namespace ucp

#endif  // UCP_SCORES_HPP_
