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

#ifndef UCP_SYNTHETIC_HPP_
#define UCP_SYNTHETIC_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "ucp/model.hpp"
#include "ucp/persons.hpp"
#include "ucp/rng.hpp"
#include "ucp/scores.hpp"

namespace ucp {

// Bivariate normal over (height_cm, weight_kg) for one gender.
struct BodyDistribution {
  double mean_height_cm;
  double mean_weight_kg;
  double var_height;
  double cov_height_weight;
  double var_weight;
};

// Defaults follow adult anthropometrics of the public height/weight
// dataset (inches/pounds converted to metric).
struct AnthropometricConfig {
  BodyDistribution male{175.33, 84.83, 7.27 * 7.27, 0.863 * 7.27 * 8.97,
                        8.97 * 8.97};
  BodyDistribution female{161.82, 61.63, 6.85 * 6.85, 0.850 * 6.85 * 8.63,
                          8.63 * 8.63};
  double female_fraction = 0.5;
};

// Throws InvalidArgument unless the covariance is positive semi-definite.
void validate(const BodyDistribution& d);

// Gender is drawn first, then (height, weight) from that gender's normal.
// Draws with a non-positive height or weight are redrawn.
std::vector<PersonRecord> generate_persons(const AnthropometricConfig& config,
                                           std::size_t n, std::uint64_t seed);
std::vector<PersonRecord> generate_persons(const AnthropometricConfig& config,
                                           std::size_t n, Rng& rng);

// Isotropic Gaussian clusters in the plane, one per class, classes drawn
// uniformly. The default places four unit-spaced clusters so that a kNN
// model reaches roughly 88% accuracy.
struct BlobConfig {
  std::vector<std::array<double, 2>> centers{
      {-1.0, -1.0}, {1.0, -1.0}, {-1.0, 1.0}, {1.0, 1.0}};
  double sd = 0.62;
};

AlphabetPtr blob_alphabet(const BlobConfig& config);
std::vector<ClassificationExample> generate_blobs(const BlobConfig& config,
                                                  std::size_t n, Rng& rng);

// y = amplitude * sin(x) + slope * x + N(0, noise_sd^2), x ~ U[x_min, x_max).
struct RegressionConfig {
  double x_min = 0.0;
  double x_max = 10.0;
  double amplitude = 3.0;
  double slope = 0.5;
  double noise_sd = 1.0;
};

double regression_mean(const RegressionConfig& config, double x);
std::vector<RegressionExample> generate_regression(const RegressionConfig& config,
                                                   std::size_t n, Rng& rng);

}  // namespace ucp

#endif  // UCP_SYNTHETIC_HPP_
