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

#include "ucp/serialization.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace ucp {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw InvalidArgument("cannot format number");
  return std::string(buf.data(), ptr);
}

double parse_double(const std::string& text) {
  if (text == "inf") return kInfiniteScore;
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw InvalidArgument("not a number: '" + text + "'");
  }
  return v;
}

namespace {

const std::set<std::string>& core_keys() {
  static const std::set<std::string> keys = {
      "format", "score-kind", "calibration", "alpha",     "n",
      "rank",   "q",          "threshold-p", "bound",     "alphabet",
      "dimension", "beta",    "beta-tilde"};
  return keys;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_count(const std::string& key, const std::string& text) {
  std::size_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw InvalidArgument("calibrator file: bad integer for '" + key + "'");
  }
  return v;
}

}  // namespace

void write_calibrator(std::ostream& os, const Calibrator& calibrator,
                      const Metadata& metadata) {
  const auto& q = calibrator.quantile();
  os << "format: ucp-calibrator 1\n"
     << "score-kind: " << to_string(calibrator.kind()) << '\n'
     << "calibration: " << (calibrator.unlabeled() ? "unlabeled" : "labeled")
     << '\n'
     << "alpha: " << format_double(q.alpha) << '\n'
     << "n: " << q.n << '\n'
     << "rank: " << q.rank << '\n'
     << "q: " << format_double(q.value) << '\n';
  if (calibrator.kind() == ScoreKind::kClassification) {
    os << "threshold-p: " << format_double(calibrator.probability_threshold())
       << '\n';
    os << "alphabet: ";
    const auto& names = calibrator.alphabet()->names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      os << (i ? "," : "") << names[i];
    }
    os << '\n';
  } else {
    os << "dimension: " << calibrator.dimension() << '\n';
  }
  if (const auto& ex = calibrator.exactness()) {
    os << "beta: " << format_double(ex->beta()) << '\n'
       << "beta-tilde: " << format_double(ex->beta_tilde()) << '\n';
  }
  os << "bound: " << format_double(calibrator.guarantee()) << '\n';
  for (const auto& [key, value] : metadata) {
    if (core_keys().count(key)) {
      throw InvalidArgument("metadata key '" + key + "' is reserved");
    }
    os << key << ": " << value << '\n';
  }
}

StoredCalibrator read_calibrator(std::istream& is) {
  std::map<std::string, std::string> fields;
  Metadata metadata;
  std::string line;
  while (std::getline(is, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto colon = t.find(':');
    if (colon == std::string::npos) {
      throw InvalidArgument("calibrator file: malformed line '" + t + "'");
    }
    const std::string key = trim(t.substr(0, colon));
    const std::string value = trim(t.substr(colon + 1));
    (core_keys().count(key) ? fields : metadata)[key] = value;
  }
  auto get = [&](const std::string& key) -> const std::string& {
    auto it = fields.find(key);
    if (it == fields.end()) {
      throw InvalidArgument("calibrator file: missing '" + key + "'");
    }
    return it->second;
  };
  if (get("format") != "ucp-calibrator 1") {
    throw InvalidArgument("calibrator file: unsupported format '" +
                          get("format") + "'");
  }
  ScoreKind kind;
  if (get("score-kind") == "classification") {
    kind = ScoreKind::kClassification;
  } else if (get("score-kind") == "regression") {
    kind = ScoreKind::kRegression;
  } else {
    throw InvalidArgument("calibrator file: unknown score-kind");
  }

  ConformalQuantile q;
  q.alpha = parse_double(get("alpha"));
  q.n = parse_count("n", get("n"));
  q.rank = parse_count("rank", get("rank"));
  q.value = parse_double(get("q"));

  std::optional<ExactnessSpec> exactness;
  const std::string& mode = get("calibration");
  if (mode == "unlabeled") {
    exactness.emplace(parse_double(get("beta-tilde")), parse_double(get("beta")));
  } else if (mode != "labeled") {
    throw InvalidArgument("calibrator file: unknown calibration '" + mode + "'");
  }

  AlphabetPtr alphabet;
  std::size_t dimension = 0;
  if (kind == ScoreKind::kClassification) {
    std::vector<std::string> names;
    std::stringstream ss(get("alphabet"));
    for (std::string name; std::getline(ss, name, ',');) names.push_back(trim(name));
    alphabet = std::make_shared<const Alphabet>(std::move(names));
  } else {
    dimension = parse_count("dimension", get("dimension"));
  }
  return {Calibrator::restore(kind, q, std::move(alphabet), dimension, exactness),
          std::move(metadata)};
}

}  // namespace ucp
