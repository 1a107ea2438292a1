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

#include "ucp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ucp/calibration.hpp"
#include "ucp/models.hpp"
#include "ucp/persons.hpp"
#include "ucp/serialization.hpp"
#include "ucp/synthetic.hpp"
#include "ucp/unlabeled.hpp"

namespace ucp::cli {

namespace fs = std::filesystem;

namespace {

// I/O failures: reported with exit code 2 like validation errors.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Units parse_units(const std::string& text) {
  if (text == "metric") return Units::kMetric;
  if (text == "imperial") return Units::kImperial;
  throw InvalidArgument("--units must be metric or imperial, got '" + text + "'");
}

struct Dataset {
  std::vector<PersonRecord> persons;
  std::string source;
};

Dataset load_dataset(const RunConfig& config, std::size_t synthetic_default) {
  if (config.synthetic > 0) {
    return {generate_persons(AnthropometricConfig{}, config.synthetic,
                             derive_seed(config.seed, 0)),
            "synthetic:" + std::to_string(config.synthetic)};
  }
  if (!config.data.empty()) {
    const std::string path = resolve_data_path(config.data);
    if (!fs::exists(path)) throw IoError("input file not found: " + path);
    return {load_persons_csv(path, parse_units(config.units)), path};
  }
  if (const char* dir = std::getenv("CP_DATA_DIR")) {
    const fs::path path = fs::path(dir) / kDefaultPersonsFile;
    if (fs::exists(path)) {
      // The public height/weight file is in inches and pounds.
      return {load_persons_csv(path, Units::kImperial), path.string()};
    }
  }
  if (synthetic_default == 0) {
    throw InvalidArgument("no input data: pass --data or --synthetic");
  }
  return {generate_persons(AnthropometricConfig{}, synthetic_default,
                           derive_seed(config.seed, 0)),
          "synthetic:" + std::to_string(synthetic_default)};
}

std::size_t neighbors(const RunConfig& config, std::size_t n_train) {
  if (config.k > 0) return config.k;
  return std::max<std::size_t>(
      1, static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(n_train)))));
}

std::string fixed4(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << v;
  return os.str();
}

MonteCarloConfig classification_mc(const RunConfig& config,
                                   std::size_t default_trials) {
  MonteCarloConfig mc;
  mc.task = TaskKind::kClassification;
  mc.alpha = config.alpha;
  mc.beta_tilde = config.beta_tilde.value_or(0.0);
  mc.trials = config.trials.value_or(default_trials);
  mc.k = neighbors(config, mc.n_train);
  mc.seed = config.seed;
  return mc;
}

VerifyResult finish(const std::string& kind, const MonteCarloReport& report,
                    std::vector<Check> checks) {
  VerifyResult r;
  r.checks = std::move(checks);
  std::ostringstream table, jsonl;
  table << kind << '\n';
  write_table(table, report, r.checks);
  write_jsonl(jsonl, kind, report, r.checks);
  r.table = table.str();
  r.jsonl = jsonl.str();
  return r;
}

VerifyResult verify_illustration(const RunConfig& config) {
  const Dataset data = load_dataset(config, 10000);
  const SplitSpec split = parse_split(config.split, config.seed);
  const IllustrationReport report =
      run_illustration(data.persons, split, config.alpha,
                       neighbors(config, split.n_train), config.beta);
  const double a = config.alpha;
  const double eps =
      3.0 * std::sqrt(a * (1.0 - a) *
                      (1.0 / static_cast<double>(split.n_calib) +
                       1.0 / static_cast<double>(split.n_test)));
  std::vector<Check> checks = {
      check_at_least("labeled coverage >= 1 - alpha - eps",
                     report.labeled.empirical_coverage, 1.0 - a - eps),
      check_at_least("unlabeled coverage >= 1 - alpha - beta_hat - eps",
                     report.unlabeled.empirical_coverage,
                     report.unlabeled.bound - eps)};
  VerifyResult r;
  r.checks = checks;
  std::ostringstream table, jsonl;
  table << "illustration  data " << data.source << '\n';
  write_table(table, report, checks);
  write_jsonl(jsonl, "illustration", report, checks);
  r.table = table.str();
  r.jsonl = jsonl.str();
  return r;
}

VerifyResult verify_remark1(const RunConfig& config) {
  MonteCarloConfig mc = classification_mc(config, 200);
  mc.blobs.sd = 0.15;
  const std::vector<double> alphas = {0.10, 0.05, 0.01};
  std::vector<MonteCarloReport> reports;
  for (double a : alphas) {
    mc.alpha = a;
    reports.push_back(monte_carlo_coverage(mc));
  }
  std::vector<Check> checks;
  checks.push_back(check_at_least("model accuracy >= 0.999",
                                  1.0 - reports.front().mean_beta_hat, 0.999));
  for (std::size_t i = 1; i < reports.size(); ++i) {
    checks.push_back(check_at_least(
        "coverage(alpha=" + fixed4(alphas[i]) + ") >= coverage(alpha=" +
            fixed4(alphas[i - 1]) + ")",
        reports[i].unlabeled.empirical_coverage,
        reports[i - 1].unlabeled.empirical_coverage));
  }
  checks.push_back(check_at_least("coverage(alpha=0.01) >= 0.985",
                                  reports.back().unlabeled.empirical_coverage,
                                  0.985));
  VerifyResult r;
  r.checks = checks;
  std::ostringstream table, jsonl;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    table << "remark1 alpha=" << alphas[i] << '\n';
    write_table(table, reports[i], {});
    write_jsonl(jsonl, "remark1", reports[i], {});
  }
  write_checks(table, checks);
  nlohmann::ordered_json verdict = {{"type", "verdict"},
                                    {"kind", "remark1"},
                                    {"passed", all_passed(checks)}};
  jsonl << verdict.dump() << '\n';
  r.table = table.str();
  r.jsonl = jsonl.str();
  return r;
}

}  // namespace

void validate(const RunConfig& config) {
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw InvalidArgument("--alpha must lie in (0, 1), got " +
                          format_double(config.alpha));
  }
  if (config.beta && !(*config.beta >= 0.0 && *config.beta < 1.0)) {
    throw InvalidArgument("--beta must lie in [0, 1)");
  }
  if (config.beta_tilde && !(*config.beta_tilde >= 0.0)) {
    throw InvalidArgument("--beta-tilde must be >= 0");
  }
  if (config.trials && *config.trials == 0) {
    throw InvalidArgument("--trials must be positive");
  }
  parse_units(config.units);
}

SplitSpec parse_split(const std::string& text, std::uint64_t seed) {
  std::vector<std::size_t> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || v == 0) {
      throw InvalidArgument("--split expects three positive counts a,b,c");
    }
    parts.push_back(v);
  }
  if (parts.size() != 3) {
    throw InvalidArgument("--split expects three positive counts a,b,c");
  }
  return {parts[0], parts[1], parts[2], seed};
}

std::string resolve_data_path(const std::string& path) {
  const fs::path p(path);
  if (p.is_absolute()) return path;
  if (const char* dir = std::getenv("CP_DATA_DIR")) {
    const fs::path candidate = fs::path(dir) / p;
    if (fs::exists(candidate)) return candidate.string();
  }
  return path;
}

VerifyResult verify(const RunConfig& config) {
  validate(config);
  const std::string& check = config.check;
  if (check == "illustration") return verify_illustration(config);
  if (check == "remark1") return verify_remark1(config);

  if (check == "theorem1" || check == "theorem2") {
    const MonteCarloReport report = monte_carlo_coverage(classification_mc(config, 200));
    std::vector<Check> checks;
    if (check == "theorem1") {
      checks.push_back(check_at_least("labeled coverage >= 1 - alpha - 0.01",
                                      report.labeled.empirical_coverage,
                                      1.0 - config.alpha - 0.01));
    } else {
      checks.push_back(check_at_least(
          "unlabeled coverage >= 1 - alpha - beta_hat - 0.01",
          report.unlabeled.empirical_coverage, report.unlabeled.bound - 0.01));
    }
    return finish(check, report, std::move(checks));
  }
  if (check == "lemma1" || check == "lemma2") {
    const MonteCarloConfig mc = classification_mc(config, 500);
    const MonteCarloReport report = monte_carlo_coverage(mc);
    const double b = report.mean_beta_hat;
    const double floor = 1.0 - b - three_sigma_slack(b, mc.trials);
    std::vector<Check> checks;
    if (check == "lemma1") {
      checks.push_back(check_at_least("P(s_hat >= s) >= 1 - beta_hat - 3 sigma",
                                      report.score_dominance, floor));
    } else {
      checks.push_back(check_at_least("P(q_hat >= q) >= 1 - beta_hat - 3 sigma",
                                      report.quantile_dominance, floor));
    }
    return finish(check, report, std::move(checks));
  }
  if (check == "regression") {
    MonteCarloConfig mc;
    mc.task = TaskKind::kRegression;
    mc.alpha = config.alpha;
    mc.beta = config.beta.value_or(0.2);
    if (!(mc.beta > 0.0)) throw InvalidArgument("--beta must be > 0 for regression");
    mc.trials = config.trials.value_or(200);
    mc.k = neighbors(config, mc.n_train);
    mc.seed = config.seed;
    const MonteCarloReport report = monte_carlo_coverage(mc);
    std::size_t exact = 0;
    for (const auto& t : report.trials) {
      if (t.q_hat.value == t.beta_tilde) ++exact;
    }
    std::vector<Check> checks = {
        check_at_least("unlabeled coverage >= 1 - alpha - beta - 0.01",
                       report.unlabeled.empirical_coverage,
                       1.0 - mc.alpha - mc.beta - 0.01),
        check_at_least("fraction of trials with q_hat == beta_tilde",
                       static_cast<double>(exact) /
                           static_cast<double>(report.trials.size()),
                       1.0)};
    return finish(check, report, std::move(checks));
  }
  throw InvalidArgument("unknown verify target '" + check + "'");
}

namespace {

void write_output(const RunConfig& config, const std::string& text,
                  std::ostream& out) {
  if (config.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(config.out, std::ios::binary);
  if (!f) throw IoError("cannot write " + config.out);
  f << text;
}

struct PredictionRow {
  std::vector<double> values;
};

// Reads a CSV whose header names prediction columns (and optionally "y").
struct RegressionTable {
  std::vector<RegressionOutput> predictions;
  std::vector<std::optional<RegressionOutput>> truth;
};

RegressionTable read_regression_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("input file not found: " + path);
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument(path + ": missing header");
  auto split = [](const std::string& l) {
    std::vector<std::string> cells;
    std::stringstream ss(l);
    for (std::string c; std::getline(ss, c, ',');) {
      c.erase(std::remove_if(c.begin(), c.end(),
                             [](char ch) { return ch == '"' || ch == '\r' || ch == ' '; }),
              c.end());
      cells.push_back(c);
    }
    return cells;
  };
  const auto header = split(line);
  std::vector<std::size_t> pred_cols, y_cols;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i].rfind("prediction", 0) == 0) {
      pred_cols.push_back(i);
    } else if (header[i] == "y" || header[i].rfind("y_", 0) == 0) {
      y_cols.push_back(i);
    } else {
      throw InvalidArgument(path + ": unknown column '" + header[i] + "'");
    }
  }
  if (pred_cols.empty()) {
    throw InvalidArgument(path + ": no 'prediction' column (a regression input is "
                                 "a table of model predictions)");
  }
  if (!y_cols.empty() && y_cols.size() != pred_cols.size()) {
    throw InvalidArgument(path + ": y and prediction dimensions differ");
  }
  RegressionTable table;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \r\t") == std::string::npos) continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) {
      throw InvalidArgument(path + ": line " + std::to_string(line_no) +
                            ": wrong number of cells");
    }
    auto grab = [&](const std::vector<std::size_t>& cols) {
      std::vector<double> v;
      for (std::size_t c : cols) {
        try {
          v.push_back(parse_double(cells[c]));
        } catch (const InvalidArgument&) {
          throw InvalidArgument(path + ": line " + std::to_string(line_no) +
                                ": non-numeric cell '" + cells[c] + "'");
        }
      }
      return RegressionOutput(std::move(v));
    };
    table.predictions.push_back(grab(pred_cols));
    if (y_cols.empty()) {
      table.truth.emplace_back();
    } else {
      table.truth.emplace_back(grab(y_cols));
    }
  }
  if (table.predictions.empty()) throw InvalidArgument(path + ": no data rows");
  return table;
}

int cmd_calibrate_regression(const RunConfig& config, std::ostream& out) {
  if (config.data.empty()) throw InvalidArgument("--data is required");
  const std::string path = resolve_data_path(config.data);
  const RegressionTable table = read_regression_csv(path);
  const std::size_t dim = table.predictions.front().dimension();
  Metadata meta = {{"source", path}};
  std::optional<Calibrator> calibrator;
  if (config.unlabeled) {
    double beta_tilde = 0.0;
    const double beta = config.beta.value_or(0.5);
    if (config.beta_tilde) {
      beta_tilde = *config.beta_tilde;
    } else if (!config.holdout.empty()) {
      const RegressionTable holdout = read_regression_csv(resolve_data_path(config.holdout));
      std::vector<double> errors;
      for (std::size_t i = 0; i < holdout.predictions.size(); ++i) {
        if (!holdout.truth[i]) throw InvalidArgument("--holdout needs a y column");
        errors.push_back(l1_distance(*holdout.truth[i], holdout.predictions[i]));
      }
      if (!(beta > 0.0)) throw InvalidArgument("--beta must be > 0 to estimate beta_tilde");
      beta_tilde = lower_empirical_quantile(errors, 1.0 - beta);
      meta["holdout"] = config.holdout;
      meta["n-holdout"] = std::to_string(errors.size());
    } else {
      throw InvalidArgument(
          "unlabeled regression calibration needs --beta-tilde or --holdout");
    }
    calibrator = calibrate_unlabeled(
        std::span<const RegressionOutput>(table.predictions),
        ExactnessSpec(beta_tilde, beta), config.alpha);
  } else {
    std::vector<Score> scores;
    for (std::size_t i = 0; i < table.predictions.size(); ++i) {
      if (!table.truth[i]) {
        throw InvalidArgument("labeled calibration needs a y column (or pass --unlabeled)");
      }
      scores.push_back(score_regression(*table.truth[i], table.predictions[i]));
    }
    calibrator = Calibrator::for_regression(dim, std::move(scores), config.alpha);
  }
  std::ostringstream os;
  write_calibrator(os, *calibrator, meta);
  write_output(config, os.str(), out);
  return kExitOk;
}

int cmd_calibrate(const RunConfig& config, std::ostream& out) {
  if (config.task == "regression") return cmd_calibrate_regression(config, out);
  if (config.task != "classification") {
    throw InvalidArgument("--task must be classification or regression");
  }
  const Dataset data = load_dataset(config, 0);
  const SplitSpec split = parse_split(config.split, config.seed);
  const SplitIndices parts = split_indices(data.persons.size(), split);

  std::vector<ClassificationExample> train;
  for (std::size_t i : parts.train) train.push_back(person_example(data.persons[i]));
  const std::size_t k = neighbors(config, train.size());
  const KnnClassifier model(weight_class_alphabet(), std::move(train), k);
  std::vector<ClassificationExample> calib;
  for (std::size_t i : parts.calib) calib.push_back(person_example(data.persons[i]));

  const ExactnessEstimate accuracy = estimate_accuracy(model, calib, "calibration split");
  Metadata meta = {{"source", data.source},
                   {"seed", std::to_string(config.seed)},
                   {"split", config.split},
                   {"k", std::to_string(k)},
                   {"holdout-accuracy", format_double(accuracy.holdout_fraction)},
                   {"n-holdout", std::to_string(accuracy.n_holdout)}};

  std::optional<Calibrator> calibrator;
  if (config.unlabeled) {
    const ExactnessSpec exactness(config.beta_tilde.value_or(0.0),
                                  config.beta.value_or(accuracy.spec.beta()));
    std::vector<Features> inputs;
    for (const auto& e : calib) inputs.push_back(e.x);
    calibrator = calibrate_unlabeled(std::span<const Features>(inputs), model,
                                     exactness, config.alpha);
  } else {
    calibrator = calibrate_labeled(std::span<const ClassificationExample>(calib),
                                   model, config.alpha);
  }

  if (config.out.empty() && config.model_out.empty()) {
    throw InvalidArgument("calibrate needs --out (the model is saved next to it)");
  }
  const std::string model_path =
      config.model_out.empty() ? config.out + ".model" : config.model_out;
  {
    std::ofstream f(model_path);
    if (!f) throw IoError("cannot write " + model_path);
    save_model(f, model);
  }
  meta["model"] = model_path;
  std::ostringstream os;
  write_calibrator(os, *calibrator, meta);
  write_output(config, os.str(), out);
  return kExitOk;
}

std::string format_set(const PredictionSet& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.labels.size(); ++i) {
    s += (i ? "," : "") + set.alphabet->name(set.labels[i]);
  }
  return s + "}";
}

std::string format_interval(const PredictionInterval& interval) {
  if (interval.center.dimension() == 1) {
    const double c = interval.center[0];
    return "[" + format_double(c - interval.radius) + ", " +
           format_double(c + interval.radius) + "]";
  }
  std::string s = "l1-ball(center=(";
  for (std::size_t i = 0; i < interval.center.dimension(); ++i) {
    s += (i ? ", " : "") + format_double(interval.center[i]);
  }
  return s + "), radius=" + format_double(interval.radius) + ")";
}

int cmd_predict(const RunConfig& config, std::ostream& out) {
  if (config.calibrator.empty()) throw InvalidArgument("--calibrator is required");
  if (config.input.empty()) throw InvalidArgument("--input is required");
  std::ifstream cf(config.calibrator);
  if (!cf) throw IoError("input file not found: " + config.calibrator);
  const StoredCalibrator stored = read_calibrator(cf);
  const Calibrator& cal = stored.calibrator;
  const std::string input = resolve_data_path(config.input);
  if (!fs::exists(input)) throw IoError("input file not found: " + input);

  std::ostringstream os;
  os << "# calibration: " << (cal.unlabeled() ? "unlabeled" : "labeled")
     << "  q: " << format_double(cal.q());
  if (cal.kind() == ScoreKind::kClassification) {
    os << "  threshold-p: " << format_double(cal.probability_threshold());
  }
  os << "  bound: " << format_double(cal.guarantee()) << '\n';

  if (cal.kind() == ScoreKind::kRegression) {
    const RegressionTable table = read_regression_csv(input);
    os << "row,interval\n";
    for (std::size_t i = 0; i < table.predictions.size(); ++i) {
      os << i + 1 << ',' << format_interval(prediction_interval(cal, table.predictions[i]))
         << '\n';
    }
    write_output(config, os.str(), out);
    return kExitOk;
  }

  std::string model_path = config.model;
  if (model_path.empty()) {
    auto it = stored.metadata.find("model");
    if (it == stored.metadata.end()) {
      throw InvalidArgument("classification predict needs --model");
    }
    model_path = it->second;
  }
  std::ifstream mf(model_path);
  if (!mf) throw IoError("input file not found: " + model_path);
  const KnnClassifier model = load_classifier(mf);
  if (!same_alphabet(model.alphabet(), cal.alphabet())) {
    throw InvalidArgument("model and calibrator use different alphabets");
  }
  std::vector<PersonRecord> persons;
  try {
    persons = load_persons_csv(input, parse_units(config.units));
  } catch (const CsvError& e) {
    throw InvalidArgument(std::string("classification calibrator needs a persons "
                                      "table: ") + e.what());
  }
  os << (config.verbose ? "row,set,scores\n" : "row,set\n");
  for (std::size_t i = 0; i < persons.size(); ++i) {
    const ProbabilityVector probs = model.predict_proba(person_features(persons[i]));
    os << i + 1 << ',' << format_set(prediction_set(cal, probs));
    if (config.verbose) {
      os << ',';
      for (Label y = 0; y < probs.size(); ++y) {
        os << (y ? ";" : "") << cal.alphabet()->name(y) << '='
           << format_double(score_classification(probs, y));
      }
    }
    os << '\n';
  }
  write_output(config, os.str(), out);
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const VerifyResult result = verify(config);
  out << result.table;
  if (!config.out.empty()) {
    std::ofstream f(config.out, std::ios::binary);
    if (!f) throw IoError("cannot write " + config.out);
    f << result.jsonl;
  }
  return all_passed(result.checks) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig config;
  CLI::App app{"Conformal prediction with labeled or unlabeled calibration data",
               "ucp"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alpha", config.alpha, "Miscoverage level in (0,1)");
    sub->add_option("--beta", config.beta, "Exactness failure probability");
    sub->add_option("--beta-tilde", config.beta_tilde, "Exactness band width");
    sub->add_option("--k", config.k,
                    "Neighbors for the kNN model (default round(sqrt(n_train)))");
    sub->add_option("--seed", config.seed, "Master seed");
    sub->add_option("--out", config.out, "Output path");
  };
  auto add_data = [&](CLI::App* sub) {
    sub->add_option("--data", config.data,
                    "Persons CSV (relative paths resolve against $CP_DATA_DIR)");
    sub->add_option("--synthetic", config.synthetic,
                    "Generate this many synthetic persons instead of --data");
    sub->add_option("--units", config.units, "metric or imperial");
    sub->add_option("--split", config.split, "Train,calibration,test counts");
  };

  CLI::App* calibrate = app.add_subcommand("calibrate", "Fit a model and calibrate");
  add_common(calibrate);
  add_data(calibrate);
  calibrate->add_flag("--unlabeled", config.unlabeled,
                      "Calibrate on model predictions only");
  calibrate->add_option("--task", config.task, "classification or regression");
  calibrate->add_option("--holdout", config.holdout,
                        "Regression: labeled predictions for estimating beta-tilde");
  calibrate->add_option("--model-out", config.model_out,
                        "Where to save the fitted model (default <out>.model)");

  CLI::App* predict = app.add_subcommand("predict", "Prediction sets or intervals");
  predict->add_option("--calibrator", config.calibrator, "Calibrator file")->required();
  predict->add_option("--input", config.input, "Rows to predict")->required();
  predict->add_option("--model", config.model, "Model file (classification)");
  predict->add_option("--units", config.units, "metric or imperial");
  predict->add_option("--out", config.out, "Output path");
  predict->add_flag("--verbose", config.verbose, "Print per-label scores");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Empirical guarantee checks");
  verify_cmd
      ->add_option("check", config.check,
                   "illustration|theorem1|theorem2|lemma1|lemma2|regression|remark1")
      ->required();
  add_common(verify_cmd);
  add_data(verify_cmd);
  verify_cmd->add_option("--trials", config.trials, "Monte Carlo trials");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    validate(config);
    if (calibrate->parsed()) return cmd_calibrate(config, out);
    if (predict->parsed()) return cmd_predict(config, out);
    return cmd_verify(config, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const CsvError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace ucp::cli
