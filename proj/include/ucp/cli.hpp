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

#ifndef UCP_CLI_HPP_
#define UCP_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ucp/experiments.hpp"
#include "ucp/report.hpp"

namespace ucp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Default file looked up under $CP_DATA_DIR when no --data is given.
inline constexpr const char* kDefaultPersonsFile = "weight-height.csv";

struct RunConfig {
  std::string command;
  std::string check;  // verify target
  std::string task = "classification";
  std::string data;
  std::string input;
  std::string calibrator;
  std::string model;
  std::string holdout;
  std::string out;
  std::string model_out;
  std::string units = "metric";
  std::size_t synthetic = 0;
  double alpha = 0.05;
  std::optional<double> beta;
  std::optional<double> beta_tilde;
  // 0 selects round(sqrt(n_train)).
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::string split = "6000,1000,3000";
  std::optional<std::size_t> trials;
  bool unlabeled = false;
  bool verbose = false;
};

// Validates ranges shared by all commands; throws InvalidArgument.
void validate(const RunConfig& config);
SplitSpec parse_split(const std::string& text, std::uint64_t seed);

// Resolves a relative data path against $CP_DATA_DIR when that is set.
std::string resolve_data_path(const std::string& path);

struct VerifyResult {
  std::vector<Check> checks;
  std::string table;
  std::string jsonl;
};

// Runs one verification ("illustration", "theorem1", "theorem2", "lemma1",
// "lemma2", "regression", "remark1") without touching the filesystem
// except to read input data.
VerifyResult verify(const RunConfig& config);

// Entry point. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ucp::cli

#endif  // UCP_CLI_HPP_
