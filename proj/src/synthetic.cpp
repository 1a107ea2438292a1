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

#include "ucp/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ucp {

namespace {

struct Cholesky2 {
  double l11, l21, l22;
};

Cholesky2 cholesky(const BodyDistribution& d) {
  validate(d);
  Cholesky2 c{};
  c.l11 = std::sqrt(d.var_height);
  c.l21 = c.l11 > 0.0 ? d.cov_height_weight / c.l11 : 0.0;
  c.l22 = std::sqrt(std::max(0.0, d.var_weight - c.l21 * c.l21));
  return c;
}

}  // namespace

void validate(const BodyDistribution& d) {
  const double det = d.var_height * d.var_weight -
                     d.cov_height_weight * d.cov_height_weight;
  const double tol = 1e-12 * std::max(1.0, d.var_height * d.var_weight);
  if (!(d.var_height >= 0.0) || !(d.var_weight >= 0.0) || det < -tol) {
    throw InvalidArgument("covariance is not positive semi-definite");
  }
  if (!(d.mean_height_cm > 0.0) || !(d.mean_weight_kg > 0.0)) {
    throw InvalidArgument("mean height and weight must be positive");
  }
}

std::vector<PersonRecord> generate_persons(const AnthropometricConfig& config,
                                           std::size_t n, Rng& rng) {
  if (!(config.female_fraction >= 0.0 && config.female_fraction <= 1.0)) {
    throw InvalidArgument("female_fraction must lie in [0, 1]");
  }
  const Cholesky2 male = cholesky(config.male);
  const Cholesky2 female = cholesky(config.female);
  std::vector<PersonRecord> out;
  out.reserve(n);
  while (out.size() < n) {
    const bool is_female = rng.uniform() < config.female_fraction;
    const auto& dist = is_female ? config.female : config.male;
    const auto& c = is_female ? female : male;
    const double z1 = rng.normal();
    const double z2 = rng.normal();
    PersonRecord p{dist.mean_height_cm + c.l11 * z1,
                   dist.mean_weight_kg + c.l21 * z1 + c.l22 * z2,
                   is_female ? Gender::kFemale : Gender::kMale};
    if (p.height_cm > 0.0 && p.weight_kg > 0.0) out.push_back(p);
  }
  return out;
}

std::vector<PersonRecord> generate_persons(const AnthropometricConfig& config,
                                           std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return generate_persons(config, n, rng);
}

AlphabetPtr blob_alphabet(const BlobConfig& config) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < config.centers.size(); ++i) {
    names.push_back("class-" + std::to_string(i));
  }
  return std::make_shared<const Alphabet>(std::move(names));
}

std::vector<ClassificationExample> generate_blobs(const BlobConfig& config,
                                                  std::size_t n, Rng& rng) {
  if (config.centers.empty()) throw InvalidArgument("no cluster centers");
  if (!(config.sd >= 0.0)) throw InvalidArgument("cluster sd must be >= 0");
  std::vector<ClassificationExample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto y = static_cast<Label>(rng.below(config.centers.size()));
    const auto& c = config.centers[y];
    const double dx = rng.normal();
    const double dy = rng.normal();
    out.push_back({{c[0] + config.sd * dx, c[1] + config.sd * dy}, y});
  }
  return out;
}

double regression_mean(const RegressionConfig& config, double x) {
  return config.amplitude * std::sin(x) + config.slope * x;
}

std::vector<RegressionExample> generate_regression(const RegressionConfig& config,
                                                   std::size_t n, Rng& rng) {
  if (!(config.x_max > config.x_min)) throw InvalidArgument("empty x range");
  if (!(config.noise_sd >= 0.0)) throw InvalidArgument("noise sd must be >= 0");
  std::vector<RegressionExample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = config.x_min + (config.x_max - config.x_min) * rng.uniform();
    const double y = regression_mean(config, x) + config.noise_sd * rng.normal();
    out.push_back({{x}, RegressionOutput{y}});
  }
  return out;
}

}  // namespace ucp
