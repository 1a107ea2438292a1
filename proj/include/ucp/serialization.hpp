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

#ifndef UCP_SERIALIZATION_HPP_
#define UCP_SERIALIZATION_HPP_

#include <iosfwd>
#include <map>
#include <string>

#include "ucp/calibration.hpp"

namespace ucp {

// Calibrators persist as "key: value" lines. Core keys:
//   format, score-kind, calibration (labeled|unlabeled), alpha, n, rank,
//   q ("inf" for the degenerate quantile), threshold-p, bound,
//   alphabet (comma separated, classification) or dimension (regression),
//   beta and beta-tilde (unlabeled only).
// Any other key is provenance metadata and round-trips untouched.
using Metadata = std::map<std::string, std::string>;

struct StoredCalibrator {
  Calibrator calibrator;
  Metadata metadata;
};

void write_calibrator(std::ostream& os, const Calibrator& calibrator,
                      const Metadata& metadata = {});
StoredCalibrator read_calibrator(std::istream& is);

// Shortest representation that parses back to the same double; "inf" for
// the infinite sentinel.
std::string format_double(double v);
double parse_double(const std::string& text);

}  // namespace ucp

#endif  // UCP_SERIALIZATION_HPP_
