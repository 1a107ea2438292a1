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

#ifndef UCP_REPORT_HPP_
#define UCP_REPORT_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "ucp/experiments.hpp"

namespace ucp {

// One asserted inequality: value >= threshold (or <= when `at_most`).
struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool at_most = false;
  bool passed = false;
};

Check check_at_least(std::string name, double value, double threshold);
Check check_at_most(std::string name, double value, double threshold);
bool all_passed(const std::vector<Check>& checks);

// JSON-lines output: one object per trial ("type": "trial"), then one
// summary object ("type": "summary"). Infinite quantiles are the string
// "inf". Field names are listed in the README.
void write_jsonl(std::ostream& os, const std::string& kind,
                 const IllustrationReport& report,
                 const std::vector<Check>& checks);
void write_jsonl(std::ostream& os, const std::string& kind,
                 const MonteCarloReport& report,
                 const std::vector<Check>& checks);

void write_table(std::ostream& os, const IllustrationReport& report,
                 const std::vector<Check>& checks);
void write_table(std::ostream& os, const MonteCarloReport& report,
                 const std::vector<Check>& checks);
void write_checks(std::ostream& os, const std::vector<Check>& checks);

}  // namespace ucp

#endif  // UCP_REPORT_HPP_
