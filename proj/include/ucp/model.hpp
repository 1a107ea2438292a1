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

#ifndef UCP_MODEL_HPP_
#define UCP_MODEL_HPP_

#include <span>
#include <vector>

#include "ucp/scores.hpp"

namespace ucp {

using Features = std::vector<double>;

struct ClassificationExample {
  Features x;
  Label y;
};

struct RegressionExample {
  Features x;
  RegressionOutput y;
};

// A fitted classifier. Implementations must be deterministic and return
// probability vectors over alphabet().
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual const AlphabetPtr& alphabet() const = 0;
  virtual ProbabilityVector predict_proba(std::span<const double> x) const = 0;

  Label predict(std::span<const double> x) const {
    return predict_proba(x).argmax();
  }
};

// A fitted regressor with outputs of fixed dimension.
class Regressor {
 public:
  virtual ~Regressor() = default;
  virtual std::size_t output_dimension() const = 0;
  virtual RegressionOutput predict(std::span<const double> x) const = 0;
};

}  // namespace ucp

#endif  // UCP_MODEL_HPP_
