#include "entaxiom/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entaxiom/axioms.hpp"
#include "entaxiom/classifier.hpp"
#include "entaxiom/entropy.hpp"
#include "entaxiom/error.hpp"
#include "entaxiom/report.hpp"

namespace entaxiom {

namespace {

constexpr std::size_t kSearchTrials = 100'000;

struct Options {
  std::string family;
  double param = 1.0;
  double scale = 1.0;
  std::string variant = "corrected";
  std::string suite = "all";
  std::vector<std::string> axioms;
  std::string dist;
  std::string cond;
  std::string grid;
  bool all = false;
  CheckConfig cfg;
  std::string format = "text";
  std::string out;
};

// "0.5,0.25 0.25" -> {0.5, 0.25, 0.25}
std::vector<double> parse_numbers(const std::string& text, std::string_view what) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw Error(ErrorCode::parse_error,
                  std::string(what) + ": '" + token + "' is not a number");
    }
    values.push_back(x);
  }
  if (values.empty()) throw Error(ErrorCode::parse_error, std::string(what) + " is empty");
  return values;
}

// Inline "a,b,c" or @path with one distribution per line.
std::vector<Dist> parse_dists(const std::string& arg) {
  std::vector<Dist> dists;
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream file(arg.substr(1));
    if (!file) throw Error(ErrorCode::parse_error, "cannot read " + arg.substr(1));
    std::string line;
    while (std::getline(file, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') {
        continue;
      }
      dists.push_back(make_dist(parse_numbers(line, "--dist")));
    }
    if (dists.empty()) throw Error(ErrorCode::parse_error, arg.substr(1) + " holds no distribution");
  } else {
    dists.push_back(make_dist(parse_numbers(arg, "--dist")));
  }
  return dists;
}

CondDist parse_cond(const std::string& arg) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(arg);
  std::string row;
  while (std::getline(in, row, ';')) rows.push_back(parse_numbers(row, "--cond"));
  return make_cond_dist(rows);
}

EntropySpec spec_of(const Options& o, const CLI::Option* param_opt) {
  if (o.family.empty()) throw Error(ErrorCode::bad_param, "--family is required");
  const Family family = parse_family(o.family);
  std::optional<double> param;
  if (param_opt->count() > 0) param = o.param;
  if (takes_param(family) && !param) {
    throw Error(ErrorCode::bad_param,
                "--param is required for " + std::string(to_string(family)));
  }
  EntropySpec spec = make_spec(family, param, o.scale, parse_variant(o.variant));
  spec.validate();
  return spec;
}

class Emitter {
 public:
  Emitter(const Options& o, std::string command, std::ostream& out)
      : o_(o), command_(std::move(command)), out_(out),
        start_(std::chrono::steady_clock::now()) {}

  void json(std::vector<EntropySpec> specs, Json payload) {
    json(std::move(specs), std::move(payload), o_.cfg);
  }

  void json(std::vector<EntropySpec> specs, Json payload, const CheckConfig& cfg) {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    Report report{command_, cfg, std::move(specs), std::move(payload),
                  std::chrono::duration<double, std::milli>(elapsed).count()};
    text(to_json(report).dump(2) + "\n");
  }

  void text(const std::string& s) {
    if (o_.out.empty()) {
      out_ << s;
      return;
    }
    std::ofstream file(o_.out, std::ios::binary);
    if (!file) throw Error(ErrorCode::parse_error, "cannot write " + o_.out);
    file << s;
  }

 private:
  const Options& o_;
  std::string command_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_;
};

void require_format(const Options& o, std::initializer_list<std::string_view> allowed) {
  if (std::find(allowed.begin(), allowed.end(), o.format) == allowed.end()) {
    throw Error(ErrorCode::bad_config,
                "--format " + o.format + " is not available for this command");
  }
}

int cmd_eval(const Options& o, const CLI::Option* param_opt, Emitter& emit) {
  require_format(o, {"text", "json"});
  const EntropySpec spec = spec_of(o, param_opt);
  if (o.dist.empty()) throw Error(ErrorCode::bad_param, "--dist is required");
  const std::vector<Dist> dists = parse_dists(o.dist);

  Json values = Json::array();
  std::string text;
  if (!o.cond.empty()) {
    if (dists.size() != 1) {
      throw Error(ErrorCode::shape_mismatch, "--cond takes exactly one --dist");
    }
    const CondDist c = parse_cond(o.cond);
    const double h = conditional_entropy(spec, dists[0], c);
    Json rows = Json::array();
    for (const Dist& row : c.rows()) rows.push_back(to_json(row));
    values.push_back(Json{{"p", to_json(dists[0])}, {"rows", rows},
                          {"conditional_entropy", h}});
    text = format_double(h) + "\n";
  } else {
    for (const Dist& p : dists) {
      const double h = evaluate(spec, p).value;
      values.push_back(Json{{"p", to_json(p)}, {"entropy", h}});
      text += format_double(h) + "\n";
    }
  }
  if (o.format == "json") {
    emit.json({spec}, Json{{"values", std::move(values)}});
  } else {
    emit.text(text);
  }
  return kExitOk;
}

std::vector<Suite> selected_suites(const std::string& name) {
  if (name == "all") {
    return {Suite::upper, Suite::lower, Suite::weak_upper, Suite::weak_lower};
  }
  return {parse_suite(name)};
}

int cmd_check(const Options& o, const CLI::Option* param_opt, Emitter& emit) {
  require_format(o, {"text", "json"});
  const EntropySpec spec = spec_of(o, param_opt);
  o.cfg.validate();

  bool violated = false;
  Json payload;
  std::string text = spec.label() + "\n";

  if (!o.axioms.empty()) {
    std::vector<AxiomId> ids;
    for (const std::string& a : o.axioms) ids.push_back(parse_axiom(a));
    Json verdicts = Json::array();
    for (AxiomId a : ids) {
      const Verdict v = check(spec, a, o.cfg);
      violated = violated || !v.passed();
      verdicts.push_back(to_json(v));
      text += verdict_text(v);
    }
    payload = Json{{"verdicts", std::move(verdicts)}};
  } else {
    const std::vector<Suite> suites = selected_suites(o.suite);
    // Members shared between suites are checked once.
    std::vector<AxiomId> needed;
    for (Suite s : suites) {
      for (const SuiteMember& m : suite_members(s)) {
        if (std::find(needed.begin(), needed.end(), m.axiom) == needed.end()) {
          needed.push_back(m.axiom);
        }
      }
    }
    std::vector<Verdict> pool;
    for (AxiomId a : needed) pool.push_back(check(spec, a, o.cfg));
    Json results = Json::array();
    for (Suite s : suites) {
      const SuiteResult r = assemble_suite(s, pool);
      violated = violated || !r.passed;
      results.push_back(to_json(r));
      text += suite_text(r);
    }
    payload = Json{{"suites", std::move(results)}};
  }

  if (o.format == "json") {
    emit.json({spec}, std::move(payload));
  } else {
    emit.text(text);
  }
  return violated ? kExitViolation : kExitOk;
}

int cmd_classify(const Options& o, const CLI::Option* param_opt, Emitter& emit) {
  require_format(o, {"text", "json", "csv", "md"});
  o.cfg.validate();
  std::vector<ClassificationRecord> records;
  std::vector<EntropySpec> specs;

  if (o.all) {
    if (!o.family.empty() || !o.grid.empty()) {
      throw Error(ErrorCode::bad_config, "--all excludes --family and --grid");
    }
    records = classify_all(o.cfg);
  } else {
    if (o.family.empty()) throw Error(ErrorCode::bad_param, "--family or --all is required");
    const Family family = parse_family(o.family);
    const Eq10Variant variant = parse_variant(o.variant);
    std::vector<double> grid;
    if (!o.grid.empty()) {
      grid = parse_numbers(o.grid, "--grid");
    } else if (param_opt->count() > 0) {
      grid = {o.param};
    } else {
      grid = default_grid(family);
    }
    // A bad grid is an input error, not a row of the table.
    for (double x : grid) EntropySpec{family, x, o.scale, variant}.validate();
    for (double x : grid) {
      records.push_back(classify(EntropySpec{family, x, o.scale, variant}, o.cfg));
    }
  }
  for (const ClassificationRecord& r : records) specs.push_back(r.spec);

  const GoldSummary summary = gold_report(records);
  if (o.format == "json") {
    Json rows = Json::array();
    for (const ClassificationRecord& r : records) rows.push_back(to_json(r));
    emit.json(std::move(specs),
              Json{{"records", std::move(rows)}, {"gold", to_json(summary, records)}});
  } else if (o.format == "csv") {
    emit.text(classification_csv(records));
  } else if (o.format == "md") {
    emit.text(classification_markdown(records, summary));
  } else {
    emit.text(classification_text(records, summary));
  }
  return summary.success() ? kExitOk : kExitViolation;
}

int cmd_search(const Options& o, const CLI::Option* param_opt,
               const CLI::Option* trials_opt, Emitter& emit) {
  require_format(o, {"text", "json"});
  const EntropySpec spec = spec_of(o, param_opt);
  if (o.axioms.size() != 1) {
    throw Error(ErrorCode::bad_config, "search takes exactly one --axiom");
  }
  const AxiomId axiom = parse_axiom(o.axioms.front());
  CheckConfig cfg = o.cfg;
  if (trials_opt->count() == 0) cfg.trials = kSearchTrials;
  cfg.validate();

  const Verdict v = check(spec, axiom, cfg);
  if (o.format == "json") {
    emit.json({spec}, Json{{"verdict", to_json(v)}}, cfg);
  } else {
    std::string text = spec.label() + " " + std::string(to_string(axiom)) + ": ";
    if (v.status == Status::counterexample) {
      const Measurement& m = v.witness->measurement;
      text += "witness found after " + std::to_string(v.trials_run) + " trials\n" +
              "  " + to_json(v.witness->instance).dump() + "\n  " + m.relation +
              ": lhs " + format_double(m.lhs) + ", rhs " + format_double(m.rhs) +
              ", margin " + format_double(m.margin) + "\n";
    } else {
      text += "none in " + std::to_string(v.trials_run) + " trials";
      if (v.status == Status::marginal) {
        text += " (" + std::to_string(v.marginal_cases) + " marginal cases)";
      }
      text += "\n";
    }
    emit.text(text);
  }
  return v.passed() ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized entropy evaluation and axiom conformance checks", "entaxiom"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a 'key = value' file; flags win");

  Options o;
  auto* param_opt = app.add_option("--param", o.param, "beta (gamma for power_log_eq19)");
  app.add_option("--family", o.family, "Entropy family identifier");
  app.add_option("--scale", o.scale, "Positive constant k");
  app.add_option("--variant", o.variant, "hybrid_eq10 variant: corrected or as_printed");
  app.add_option("--suite", o.suite, "upper, lower, weak-upper, weak-lower or all");
  app.add_option("--axiom", o.axioms, "Axiom identifier (repeatable)");
  app.add_option("--dist", o.dist, "Distribution 'a,b,...' or @file, one per line");
  app.add_option("--cond", o.cond, "Conditional rows 'a,b;c,d' for H(Y/X)");
  app.add_option("--grid", o.grid, "Parameter grid 'a,b,...'");
  app.add_flag("--all", o.all, "Classify every family over its default grid");
  auto* trials_opt = app.add_option("--trials", o.cfg.trials, "Sampled trials per axiom");
  app.add_option("--max-n,--max_n", o.cfg.max_n, "Largest sampled support size");
  app.add_option("--max-n-uniform,--max_n_uniform", o.cfg.max_n_uniform,
                 "Largest N for the uniform chain");
  app.add_option("--seed", o.cfg.seed, "Base seed");
  app.add_option("--tol-eq,--tol_eq", o.cfg.tol_eq, "Slack for equality cases");
  app.add_option("--tol-violation,--tol_violation", o.cfg.tol_violation,
                 "Margin required for a counterexample");
  app.add_option("--hill-climb-steps,--hill_climb_steps", o.cfg.hill_climb_steps,
                 "Local search steps per witness");
  app.add_option("--threads", o.cfg.threads, "Worker threads, 0 = all cores");
  app.add_option("--format", o.format, "text, json, csv or md")
      ->check(CLI::IsMember({"text", "json", "csv", "md"}));
  app.add_option("--out", o.out, "Write the result to a file");

  auto* eval = app.add_subcommand("eval", "Evaluate an entropy")->fallthrough();
  auto* check_cmd = app.add_subcommand("check", "Run axiom suites")->fallthrough();
  auto* classify_cmd = app.add_subcommand("classify", "Classify over a grid")->fallthrough();
  auto* search = app.add_subcommand("search", "Extended counterexample search")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  std::string command;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) command += ' ';
    command += argv[i];
  }
  Emitter emit(o, command, out);

  try {
    if (*eval) return cmd_eval(o, param_opt, emit);
    if (*check_cmd) return cmd_check(o, param_opt, emit);
    if (*classify_cmd) return cmd_classify(o, param_opt, emit);
    if (*search) return cmd_search(o, param_opt, trials_opt, emit);
  } catch (const Error& e) {
    err << "entaxiom: error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace entaxiom
