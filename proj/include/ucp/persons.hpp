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

#ifndef UCP_PERSONS_HPP_
#define UCP_PERSONS_HPP_

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ucp/model.hpp"
#include "ucp/scores.hpp"

namespace ucp {

enum class Gender { kMale, kFemale };

enum class Units { kMetric, kImperial };

inline constexpr double kCmPerInch = 2.54;
inline constexpr double kKgPerPound = 0.45359237;
inline constexpr double kOverweightBmi = 25.0;

struct PersonRecord {
  double height_cm;
  double weight_kg;
  Gender gender;
};

// Four-way label: gender crossed with overweight (BMI > 25).
enum class WeightClass {
  kNormalMale = 0,
  kOverweightMale = 1,
  kNormalFemale = 2,
  kOverweightFemale = 3,
};

// The four weight classes in label-index order.
const AlphabetPtr& weight_class_alphabet();

double bmi(const PersonRecord& p);
WeightClass label_bmi(const PersonRecord& p);

// Model inputs: (height_cm, weight_kg, is_female).
Features person_features(const PersonRecord& p);
ClassificationExample person_example(const PersonRecord& p);

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Gender parse_gender(const std::string& text);

// Reads a header row naming gender, height and weight (any order, case and
// surrounding quotes ignored); every other column name is an error. Rows
// are converted to metric when units is kImperial. Errors name the 1-based
// line number.
std::vector<PersonRecord> read_persons_csv(std::istream& in, Units units);
std::vector<PersonRecord> load_persons_csv(const std::filesystem::path& path,
                                           Units units);

}  // namespace ucp

#endif  // UCP_PERSONS_HPP_
