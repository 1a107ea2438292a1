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

#include "ucp/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <ostream>

#include "json.hpp"

namespace ucp {

using nlohmann::ordered_json;

Check check_at_least(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, false, value >= threshold};
}

Check check_at_most(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, true, value <= threshold};
}

bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

namespace {

ordered_json number(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

ordered_json quantile_json(const ConformalQuantile& q) {
  return {{"n", q.n},
          {"rank", q.rank},
          {"level", q.level()},
          {"value", number(q.value)},
          {"threshold_p", std::max(0.0, 1.0 - q.value)}};
}

ordered_json checks_json(const std::vector<Check>& checks) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"value", c.value},
                   {"relation", c.at_most ? "<=" : ">="},
                   {"threshold", c.threshold},
                   {"passed", c.passed}});
  }
  return arr;
}

ordered_json coverage_json(const CoverageReport& r) {
  return {{"method", r.method},
          {"empirical_coverage", r.empirical_coverage},
          {"mean_set_size", r.mean_set_size},
          {"bound", r.bound},
          {"n_test", r.n_test},
          {"trials", r.trials}};
}

const char* task_name(TaskKind t) {
  return t == TaskKind::kClassification ? "classification" : "regression";
}

std::string fmt_q(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << v;
  return os.str();
}

}  // namespace

void write_jsonl(std::ostream& os, const std::string& kind,
                 const IllustrationReport& report,
                 const std::vector<Check>& checks) {
  ordered_json trial = {
      {"type", "trial"},
      {"trial", 0},
      {"accuracy", report.accuracy},
      {"beta_hat", report.beta},
      {"q", quantile_json(report.q)},
      {"q_hat", quantile_json(report.q_hat)},
      {"labeled_coverage", report.labeled.empirical_coverage},
      {"unlabeled_coverage", report.unlabeled.empirical_coverage},
      {"labeled_set_size", report.labeled.mean_set_size},
      {"unlabeled_set_size", report.unlabeled.mean_set_size}};
  os << trial.dump() << '\n';
  ordered_json summary = {
      {"type", "summary"},
      {"kind", kind},
      {"alpha", report.alpha},
      {"seed", report.split.seed},
      {"split", {report.split.n_train, report.split.n_calib, report.split.n_test}},
      {"k", report.k},
      {"accuracy", report.accuracy},
      {"beta_hat", report.beta},
      {"q", quantile_json(report.q)},
      {"q_hat", quantile_json(report.q_hat)},
      {"labeled", coverage_json(report.labeled)},
      {"unlabeled", coverage_json(report.unlabeled)},
      {"checks", checks_json(checks)},
      {"passed", all_passed(checks)}};
  os << summary.dump() << '\n';
}

void write_jsonl(std::ostream& os, const std::string& kind,
                 const MonteCarloReport& report,
                 const std::vector<Check>& checks) {
  for (const auto& t : report.trials) {
    ordered_json row = {{"type", "trial"},
                        {"trial", t.trial},
                        {"beta_hat", t.beta_hat},
                        {"beta_tilde", t.beta_tilde},
                        {"bound", t.bound},
                        {"q", number(t.q.value)},
                        {"q_hat", number(t.q_hat.value)},
                        {"labeled_coverage", t.labeled_coverage},
                        {"unlabeled_coverage", t.unlabeled_coverage},
                        {"labeled_set_size", t.labeled_set_size},
                        {"unlabeled_set_size", t.unlabeled_set_size},
                        {"dominated_points", t.dominated_points},
                        {"q_hat_ge_q", t.q_hat_dominates}};
    os << row.dump() << '\n';
  }
  const auto& c = report.config;
  ordered_json summary = {{"type", "summary"},
                          {"kind", kind},
                          {"task", task_name(c.task)},
                          {"alpha", c.alpha},
                          {"seed", c.seed},
                          {"trials", c.trials},
                          {"n_train", c.n_train},
                          {"n_holdout", c.n_holdout},
                          {"n_calib", c.n_calib},
                          {"n_test", c.n_test},
                          {"k", c.k},
                          {"mean_beta_hat", report.mean_beta_hat},
                          {"score_dominance", report.score_dominance},
                          {"quantile_dominance", report.quantile_dominance},
                          {"labeled", coverage_json(report.labeled)},
                          {"unlabeled", coverage_json(report.unlabeled)},
                          {"checks", checks_json(checks)},
                          {"passed", all_passed(checks)}};
  os << summary.dump() << '\n';
}

void write_checks(std::ostream& os, const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": "
       << std::fixed << std::setprecision(4) << c.value
       << (c.at_most ? " <= " : " >= ") << c.threshold << '\n';
  }
  os.unsetf(std::ios::floatfield);
}

void write_table(std::ostream& os, const IllustrationReport& report,
                 const std::vector<Check>& checks) {
  const auto flags = os.flags();
  os << "split " << report.split.n_train << '/' << report.split.n_calib << '/'
     << report.split.n_test << "  seed " << report.split.seed << "  k "
     << report.k << "  alpha " << report.alpha << '\n';
  os << std::fixed << std::setprecision(4);
  os << "accuracy " << report.accuracy << "  beta_hat " << report.beta << '\n';
  os << std::left << std::setw(11) << "method" << std::setw(10) << "q"
     << std::setw(13) << "threshold_p" << std::setw(10) << "coverage"
     << std::setw(10) << "set_size" << "bound\n";
  auto row = [&](const CoverageReport& r, const ConformalQuantile& q) {
    os << std::setw(11) << r.method << std::setw(10) << fmt_q(q.value)
       << std::setw(13) << std::max(0.0, 1.0 - q.value) << std::setw(10)
       << r.empirical_coverage << std::setw(10) << r.mean_set_size << r.bound
       << '\n';
  };
  row(report.labeled, report.q);
  row(report.unlabeled, report.q_hat);
  os.flags(flags);
  write_checks(os, checks);
}

void write_table(std::ostream& os, const MonteCarloReport& report,
                 const std::vector<Check>& checks) {
  const auto flags = os.flags();
  const auto& c = report.config;
  os << task_name(c.task) << "  trials " << c.trials << "  n_calib "
     << c.n_calib << "  n_test " << c.n_test << "  alpha " << c.alpha
     << "  seed " << c.seed << '\n';
  os << std::fixed << std::setprecision(4);
  os << "mean beta_hat " << report.mean_beta_hat << "  score dominance "
     << report.score_dominance << "  quantile dominance "
     << report.quantile_dominance << '\n';
  os << std::left << std::setw(11) << "method" << std::setw(12) << "coverage"
     << std::setw(10) << "set_size" << "bound\n";
  for (const auto* r : {&report.labeled, &report.unlabeled}) {
    os << std::setw(11) << r->method << std::setw(12) << r->empirical_coverage
       << std::setw(10) << r->mean_set_size << r->bound << '\n';
  }
  os.flags(flags);
  write_checks(os, checks);
}

}  // namespace ucp
