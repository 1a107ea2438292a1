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

#include "ucp/persons.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>

namespace ucp {

const AlphabetPtr& weight_class_alphabet() {
  static const AlphabetPtr alphabet = std::make_shared<const Alphabet>(
      Alphabet{"normal-male", "overweight-male", "normal-female",
               "overweight-female"});
  return alphabet;
}

double bmi(const PersonRecord& p) {
  const double m = p.height_cm / 100.0;
  return p.weight_kg / (m * m);
}

WeightClass label_bmi(const PersonRecord& p) {
  const bool over = bmi(p) > kOverweightBmi;
  if (p.gender == Gender::kMale) {
    return over ? WeightClass::kOverweightMale : WeightClass::kNormalMale;
  }
  return over ? WeightClass::kOverweightFemale : WeightClass::kNormalFemale;
}

Features person_features(const PersonRecord& p) {
  return {p.height_cm, p.weight_kg, p.gender == Gender::kFemale ? 1.0 : 0.0};
}

ClassificationExample person_example(const PersonRecord& p) {
  return {person_features(p), static_cast<Label>(label_bmi(p))};
}

namespace {

std::string normalize(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    s = s.substr(1, s.size() - 2);
  }
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      cell += c;
    } else if (c == ',' && !quoted) {
      cells.push_back(normalize(cell));
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  cells.push_back(normalize(cell));
  return cells;
}

std::optional<double> parse_number(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

Gender parse_gender(const std::string& text) {
  const std::string g = normalize(text);
  if (g == "male" || g == "m") return Gender::kMale;
  if (g == "female" || g == "f") return Gender::kFemale;
  throw CsvError("unrecognized gender '" + text + "'");
}

std::vector<PersonRecord> read_persons_csv(std::istream& in, Units units) {
  std::string line;
  std::size_t line_no = 0;
  // Skip a UTF-8 BOM and blank lines before the header.
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (!normalize(line).empty()) break;
  }
  if (normalize(line).empty()) throw CsvError("missing header row");

  const auto header = split_row(line);
  std::array<std::size_t, 3> col{};  // gender, height, weight
  std::array<bool, 3> seen{};
  static constexpr std::array<const char*, 3> kNames = {"gender", "height",
                                                        "weight"};
  for (std::size_t i = 0; i < header.size(); ++i) {
    auto it = std::find(kNames.begin(), kNames.end(), header[i]);
    if (it == kNames.end()) {
      throw CsvError("line " + std::to_string(line_no) + ": unknown column '" +
                     header[i] + "'");
    }
    const auto j = static_cast<std::size_t>(it - kNames.begin());
    if (seen[j]) throw CsvError("duplicate column '" + header[i] + "'");
    seen[j] = true;
    col[j] = i;
  }
  for (std::size_t j = 0; j < 3; ++j) {
    if (!seen[j]) throw CsvError(std::string("missing column '") + kNames[j] + "'");
  }

  const double to_cm = units == Units::kImperial ? kCmPerInch : 1.0;
  const double to_kg = units == Units::kImperial ? kKgPerPound : 1.0;
  std::vector<PersonRecord> out;
  while (std::getline(in, line)) {
    ++line_no;
    if (normalize(line).empty()) continue;
    const auto cells = split_row(line);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (cells.size() != header.size()) {
      throw CsvError(where + "expected " + std::to_string(header.size()) +
                     " cells, got " + std::to_string(cells.size()));
    }
    PersonRecord p{};
    try {
      p.gender = parse_gender(cells[col[0]]);
    } catch (const CsvError& e) {
      throw CsvError(where + e.what());
    }
    const auto h = parse_number(cells[col[1]]);
    const auto w = parse_number(cells[col[2]]);
    if (!h) throw CsvError(where + "non-numeric height '" + cells[col[1]] + "'");
    if (!w) throw CsvError(where + "non-numeric weight '" + cells[col[2]] + "'");
    p.height_cm = *h * to_cm;
    p.weight_kg = *w * to_kg;
    if (!(p.height_cm > 0.0) || !(p.weight_kg > 0.0)) {
      throw CsvError(where + "height and weight must be positive");
    }
    out.push_back(p);
  }
  return out;
}

std::vector<PersonRecord> load_persons_csv(const std::filesystem::path& path,
                                           Units units) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open '" + path.string() + "'");
  return read_persons_csv(in, units);
}

}  // namespace ucp
