// Acceptance suite: one PASS/FAIL line per criterion.
//
// Criteria listed in kExpectedRed fail for mathematical reasons (the claimed
// classification is false at some grid points; the witnesses are printed).
// The process exits 0 when every criterion lands where expected, so an
// unexpected pass is reported just like an unexpected failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "entaxiom/axioms.hpp"
#include "entaxiom/classifier.hpp"
#include "entaxiom/cli.hpp"
#include "entaxiom/report.hpp"
#include "oracles.hpp"

using namespace entaxiom;

namespace {

// Pinned tolerances.
constexpr double kTolEq = 1e-9;
constexpr double kTolViolation = 1e-7;
constexpr double kRenyiWitnessMin = 0.05;
constexpr double kReverifyTol = 1e-12;
constexpr double kAdditivityTol = 1e-10;
constexpr double kIdentityTol = 1e-10;
constexpr double kLimitTol = 1e-6;
constexpr double kPoleOffset = 1e-10;
constexpr double kMonotoneTol = 1e-9;
constexpr double kRuntimeBudgetMs = 120'000.0;
constexpr std::size_t kTrials = 10'000;
constexpr std::size_t kIdentityTriples = 10'000;

const std::set<int> kExpectedRed = {1, 4};

CheckConfig default_cfg() {
  CheckConfig cfg;
  cfg.trials = kTrials;
  cfg.tol_eq = kTolEq;
  cfg.tol_violation = kTolViolation;
  return cfg;
}

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << "    - " << what << '\n';
    }
  }
};

std::string describe_failures(const ClassificationRecord& r) {
  std::string s;
  for (const SuiteResult& suite : r.suites) {
    for (const SuiteVerdict& sv : suite.verdicts) {
      if (sv.role == Role::advisory || sv.verdict.passed()) continue;
      s += std::string(" ") + std::string(to_string(suite.suite)) + "/" +
           std::string(to_string(sv.verdict.axiom)) + " margin " +
           format_double(sv.verdict.witness->measurement.margin);
    }
  }
  return s;
}

// Every counterexample witness re-verified after a trip through JSON text.
void reverify_all(const std::vector<Verdict>& verdicts, Outcome& o, std::size_t& count) {
  for (const Verdict& v : verdicts) {
    if (v.status != Status::counterexample) continue;
    ++count;
    const Verdict back = verdict_from_json(Json::parse(to_json(v).dump()));
    const Measurement m = reverify(back);
    const Measurement& w = v.witness->measurement;
    o.require(std::abs(m.lhs - w.lhs) <= kReverifyTol &&
                  std::abs(m.rhs - w.rhs) <= kReverifyTol &&
                  std::abs(m.margin - w.margin) <= kReverifyTol,
              v.spec.label() + " " + std::string(to_string(v.axiom)) +
                  " witness does not re-verify");
  }
}

std::vector<Verdict> verdicts_of(const std::vector<ClassificationRecord>& records) {
  std::vector<Verdict> out;
  for (const ClassificationRecord& r : records) {
    for (const SuiteResult& s : r.suites) {
      for (const SuiteVerdict& sv : s.verdicts) out.push_back(sv.verdict);
    }
    if (r.probe) out.push_back(*r.probe);
  }
  return out;
}

struct Context {
  std::vector<ClassificationRecord> all;
  double classify_ms = 0.0;
};

Outcome criterion1(const Context& ctx) {
  Outcome o;
  const GoldSummary summary = gold_report(ctx.all);
  o.notes << "    " << ctx.all.size() << " grid points, " << summary.disagreements.size()
          << " disagreements, " << format_double(std::round(ctx.classify_ms)) << " ms\n";
  for (std::size_t i : summary.disagreements) {
    const ClassificationRecord& r = ctx.all[i];
    o.require(false, r.spec.label() + ": claimed " + std::string(to_string(*r.gold)) +
                         ", found " + std::string(to_string(r.label)) + ";" +
                         describe_failures(r));
  }
  o.require(summary.errors.empty(), "invalid grid points in the default grids");
  o.require(ctx.classify_ms < kRuntimeBudgetMs, "classification exceeded the time budget");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const CheckConfig cfg = default_cfg();
  for (Family f : {Family::tsallis, Family::daroczy, Family::hybrid_eq10}) {
    for (double b : kDefaultGrid) {
      const EntropySpec spec{f, b};
      const Suite suite = b > 1.0 ? Suite::upper : Suite::lower;
      const SuiteResult r = run_suite(spec, suite, cfg);
      for (const SuiteVerdict& sv : r.verdicts) {
        if (sv.role == Role::advisory) continue;
        o.require(sv.verdict.status == Status::consistent && sv.verdict.worst_margin <= kTolEq,
                  spec.label() + " " + std::string(to_string(suite)) + "/" +
                      std::string(to_string(sv.verdict.axiom)) + " worst margin " +
                      format_double(sv.verdict.worst_margin));
      }
    }
  }
  return o;
}

Outcome criterion3(const Context& ctx) {
  Outcome o;
  const CheckConfig cfg = default_cfg();
  std::vector<Verdict> emitted;

  const Verdict renyi = check({Family::renyi, 2.0}, AxiomId::upper_increasing, cfg);
  emitted.push_back(renyi);
  o.require(renyi.status == Status::counterexample, "renyi(2) upper_increasing consistent");
  if (renyi.witness) {
    const auto& c = std::get<RefinementCase>(renyi.witness->instance);
    const auto parent = std::vector<double>(c.r.parent.weights().begin(),
                                            c.r.parent.weights().end());
    const double mass = parent[c.r.index];
    std::vector<double> child;
    for (double x : c.r.parts) child.push_back(x / mass);
    const double margin = oracle::renyi(oracle::split(parent, c.r.index, c.r.parts), 2.0) -
                          oracle::renyi(parent, 2.0) - mass * oracle::renyi(child, 2.0);
    o.notes << "    renyi(2) witness margin " << format_double(margin) << '\n';
    o.require(margin >= kRenyiWitnessMin, "renyi(2) witness margin below 0.05");
  }

  const std::vector<double> seed_parent = {0.9, 0.1};
  const double seed_margin =
      oracle::renyi(oracle::split(seed_parent, 0, {0.45, 0.45}), 2.0) -
      oracle::renyi(seed_parent, 2.0) - 0.9 * std::numbers::ln2;
  o.require(std::abs(seed_margin - 0.0572) < 5e-5, "seed witness margin is not 0.0572");

  for (AxiomId a : {AxiomId::upper_increasing, AxiomId::lower_increasing}) {
    const Verdict v = check({Family::abe, 2.0}, a, cfg);
    emitted.push_back(v);
    o.require(v.status == Status::counterexample,
              "abe(2) " + std::string(to_string(a)) + " consistent");
  }

  std::size_t count = 0;
  reverify_all(emitted, o, count);
  reverify_all(verdicts_of(ctx.all), o, count);
  o.notes << "    " << count << " witnesses re-verified\n";
  return o;
}

Outcome criterion4(const Context& ctx) {
  Outcome o;
  const CheckConfig cfg = default_cfg();
  for (double b : {0.5, 2.0}) {
    for (AxiomId a : {AxiomId::weak_subadditivity, AxiomId::weak_superadditivity}) {
      const Verdict v = check({Family::renyi, b}, a, cfg);
      o.require(v.status == Status::consistent && std::abs(v.worst_margin) <= kAdditivityTol,
                "renyi(" + format_double(b) + ") " + std::string(to_string(a)) +
                    " residual " + format_double(v.worst_margin));
    }
  }

  const auto lv = [&](double b, Suite passes, AxiomId fails) {
    const EntropySpec spec{Family::landsberg_vedral, b};
    o.require(run_suite(spec, passes, cfg).passed,
              spec.label() + " fails " + std::string(to_string(passes)));
    const Verdict v = check(spec, fails, cfg);
    o.require(v.status == Status::counterexample && v.witness.has_value(),
              spec.label() + " " + std::string(to_string(fails)) + " has no witness");
  };
  lv(2.0, Suite::weak_lower, AxiomId::weak_subadditivity);
  lv(0.5, Suite::weak_upper, AxiomId::weak_superadditivity);

  for (const ClassificationRecord& r : ctx.all) {
    if (r.spec.family != Family::power_log_eq19 && r.spec.family != Family::weighted_log_eq20) {
      continue;
    }
    if (r.spec.param == 1.0) continue;
    o.require(r.agrees_with_paper.value_or(false),
              r.spec.label() + ": claimed " + std::string(to_string(*r.gold)) + ", found " +
                  std::string(to_string(r.label)) + ";" + describe_failures(r));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  Rng rng(derive_seed(42, 5, 0));
  IdentityResiduals worst;
  std::size_t triples = 0;
  while (triples < kIdentityTriples) {
    const double b = 0.1 + 3.9 * rng.uniform01();
    if (b > 0.99 && b < 1.01) continue;
    const Dist p = sample_random(rng.uniform_int(1, 8), rng);
    const Dist q = sample_random(rng.uniform_int(1, 8), rng);
    const IdentityResiduals r = identity_residuals(b, p, q);
    worst.abe_decomposition = std::max(worst.abe_decomposition, r.abe_decomposition);
    worst.tsallis_pseudoadditivity =
        std::max(worst.tsallis_pseudoadditivity, r.tsallis_pseudoadditivity);
    worst.daroczy_tsallis = std::max(worst.daroczy_tsallis, r.daroczy_tsallis);
    worst.renyi_additivity = std::max(worst.renyi_additivity, r.renyi_additivity);
    worst.eq20_product = std::max(worst.eq20_product, r.eq20_product);
    ++triples;
  }
  o.notes << "    worst residual " << format_double(worst.max()) << " over " << triples
          << " triples\n";
  o.require(worst.abe_decomposition <= kIdentityTol, "abe decomposition");
  o.require(worst.tsallis_pseudoadditivity <= kIdentityTol, "tsallis pseudoadditivity");
  o.require(worst.daroczy_tsallis <= kIdentityTol, "daroczy-tsallis proportionality");
  o.require(worst.renyi_additivity <= kIdentityTol, "renyi additivity");
  o.require(worst.eq20_product <= kIdentityTol, "weighted-log product identity");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const CheckConfig cfg = default_cfg();
  for (Suite s : {Suite::upper, Suite::lower, Suite::weak_upper, Suite::weak_lower}) {
    o.require(run_suite({}, s, cfg).passed, "shannon fails " + std::string(to_string(s)));
  }
  for (double k : {1.0, 3.0}) {
    o.require(shannon_equivalence_probe({Family::shannon, 1.0, k}, cfg).passed(),
              "probe fails for shannon scale " + format_double(k));
  }
  o.require(!shannon_equivalence_probe({Family::tsallis, 2.0}, cfg).passed(),
            "probe passes for tsallis(2)");

  Rng rng(derive_seed(42, 6, 0));
  for (int t = 0; t < 1000; ++t) {
    const Dist p = sample_random(rng.uniform_int(1, 8), rng);
    const double s = evaluate({}, p).value;
    for (double b : {1.0 + kPoleOffset, 1.0 - kPoleOffset}) {
      const auto near = [&](Family f, double expected) {
        const double h = evaluate({f, b}, p).value;
        o.require(std::abs(h - expected) <= kLimitTol,
                  std::string(to_string(f)) + " misses its limit by " +
                      format_double(std::abs(h - expected)));
      };
      near(Family::tsallis, s);
      near(Family::renyi, s);
      near(Family::daroczy, s / std::numbers::ln2);
      near(Family::landsberg_vedral, s);
    }
  }
  return o;
}

Outcome criterion7(const Context& ctx) {
  Outcome o;
  std::size_t checked = 0;
  for (const ClassificationRecord& r : ctx.all) {
    if (r.label != Label::upper && r.label != Label::lower) continue;
    ++checked;
    double prev = evaluate(r.spec, uniform(1)).value;
    for (std::size_t n = 2; n <= 64; ++n) {
      const double h = evaluate(r.spec, uniform(n)).value;
      o.require(h >= prev - kMonotoneTol,
                r.spec.label() + " decreases at N=" + std::to_string(n));
      prev = h;
    }
  }
  o.notes << "    " << checked << " upper/lower specs checked\n";
  o.require(checked > 0, "no upper or lower labels to check");
  return o;
}

std::string run(std::vector<std::string> args) {
  args.insert(args.begin(), "entaxiom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

Outcome criterion8() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands = {
      {"check", "--family", "tsallis", "--param", "2", "--suite", "upper", "--seed", "42"},
      {"check", "--family", "renyi", "--param", "2", "--suite", "upper", "--seed", "42"},
      {"check", "--family", "abe", "--param", "0.5", "--seed", "1234"},
  };
  for (auto cmd : commands) {
    cmd.insert(cmd.end(), {"--format", "json"});
    auto serial = cmd;
    serial.insert(serial.end(), {"--threads", "1"});
    auto parallel = cmd;
    parallel.insert(parallel.end(), {"--threads", "4"});
    const std::string a = Json::parse(run(serial))["payload"].dump();
    const std::string b = Json::parse(run(serial))["payload"].dump();
    const std::string c = Json::parse(run(parallel))["payload"].dump();
    o.require(a == b, "repeat differs: " + cmd[2]);
    o.require(a == c, "threads 1 vs 4 differ: " + cmd[2]);
  }
  return o;
}

}  // namespace

int main() {
  Context ctx;
  const auto start = std::chrono::steady_clock::now();
  ctx.all = classify_all(default_cfg());
  ctx.classify_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"gold classification reproduction", [&] { return criterion1(ctx); }},
      {"positive strong suites", [] { return criterion2(); }},
      {"negative results with self-certifying witnesses", [&] { return criterion3(ctx); }},
      {"weak classifications", [&] { return criterion4(ctx); }},
      {"closed-form identities", [] { return criterion5(); }},
      {"shannon consistency and pole limits", [] { return criterion6(); }},
      {"extremal monotonicity of upper/lower labels", [&] { return criterion7(ctx); }},
      {"determinism of report payloads", [] { return criterion8(); }},
  };

  int passed = 0;
  int surprises = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const Outcome o = criteria[i].second();
    const bool expected_red = kExpectedRed.count(id) > 0;
    std::printf("%s criterion %d: %s%s\n", o.pass ? "PASS" : "FAIL", id,
                criteria[i].first.c_str(),
                !o.pass && expected_red ? " (expected: claimed labels do not hold)" : "");
    std::fputs(o.notes.str().c_str(), stdout);
    passed += o.pass;
    if (o.pass == expected_red) ++surprises;
  }
  std::printf("%d/%zu criteria pass; %d outcome(s) differ from the recorded expectation\n",
              passed, criteria.size(), surprises);
  return surprises == 0 ? 0 : 1;
}
