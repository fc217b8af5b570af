#include "entaxiom/report.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <sstream>

#include "entaxiom/error.hpp"

namespace entaxiom {

std::string format_double(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) {
    throw Error(ErrorCode::parse_error, std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("field '") + key + "': " + e.what());
  }
}

std::vector<double> weights_of(const Dist& p) {
  return {p.weights().begin(), p.weights().end()};
}

Json rows_json(const CondDist& c) {
  Json rows = Json::array();
  for (const Dist& row : c.rows()) rows.push_back(to_json(row));
  return rows;
}

CondDist rows_from_json(const Json& j) {
  std::vector<Dist> rows;
  for (const Json& row : j) rows.push_back(dist_from_json(row));
  return make_cond_dist(std::move(rows));
}

}  // namespace

Json to_json(const Dist& p) { return Json(weights_of(p)); }

Dist dist_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::parse_error, "distribution must be an array");
  std::vector<double> w;
  for (const Json& x : j) {
    if (!x.is_number()) throw Error(ErrorCode::parse_error, "non-numeric weight");
    w.push_back(x.get<double>());
  }
  return make_dist(w);
}

Json to_json(const EntropySpec& spec) {
  return Json{{"family", to_string(spec.family)},
              {"param", spec.param},
              {"scale", spec.scale},
              {"eq10_variant", to_string(spec.eq10_variant)},
              {"label", spec.label()}};
}

EntropySpec spec_from_json(const Json& j) {
  EntropySpec spec;
  spec.family = parse_family(field<std::string>(j, "family"));
  spec.param = field<double>(j, "param");
  spec.scale = field<double>(j, "scale");
  spec.eq10_variant = parse_variant(field<std::string>(j, "eq10_variant"));
  spec.validate();
  return spec;
}

Json to_json(const CheckConfig& cfg) {
  return Json{{"trials", cfg.trials},
              {"max_n", cfg.max_n},
              {"seed", cfg.seed},
              {"tol_eq", cfg.tol_eq},
              {"tol_violation", cfg.tol_violation},
              {"hill_climb_steps", cfg.hill_climb_steps},
              {"max_n_uniform", cfg.max_n_uniform},
              {"threads", cfg.threads}};
}

CheckConfig config_from_json(const Json& j) {
  CheckConfig cfg;
  cfg.trials = field<std::size_t>(j, "trials");
  cfg.max_n = field<std::size_t>(j, "max_n");
  cfg.seed = field<std::uint64_t>(j, "seed");
  cfg.tol_eq = field<double>(j, "tol_eq");
  cfg.tol_violation = field<double>(j, "tol_violation");
  cfg.hill_climb_steps = field<std::size_t>(j, "hill_climb_steps");
  cfg.max_n_uniform = field<std::size_t>(j, "max_n_uniform");
  cfg.threads = field<std::size_t>(j, "threads");
  cfg.validate();
  return cfg;
}

Json to_json(const Instance& instance) {
  Json j{{"kind", instance_kind(instance)}};
  std::visit(
      [&j](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, DistCase>) {
          j["p"] = to_json(c.p);
        } else if constexpr (std::is_same_v<T, PermutationCase>) {
          j["p"] = to_json(c.p);
          j["sigma"] = c.sigma;
        } else if constexpr (std::is_same_v<T, PaddingCase>) {
          j["p"] = to_json(c.p);
          j["position"] = c.position;
        } else if constexpr (std::is_same_v<T, RefinementCase>) {
          j["parent"] = to_json(c.r.parent);
          j["index"] = c.r.index;
          j["parts"] = c.r.parts;
        } else if constexpr (std::is_same_v<T, ProductCase>) {
          j["p"] = to_json(c.p);
          j["q"] = to_json(c.q);
        } else if constexpr (std::is_same_v<T, JointCase>) {
          j["p"] = to_json(c.p);
          j["rows"] = rows_json(c.c);
        } else if constexpr (std::is_same_v<T, UniformPairCase>) {
          j["smaller"] = c.smaller;
          j["larger"] = c.larger;
        } else if constexpr (std::is_same_v<T, DirectionCase>) {
          j["p"] = to_json(c.p);
          j["direction"] = c.direction;
        }
      },
      instance);
  return j;
}

Instance instance_from_json(const Json& j) {
  const auto kind = field<std::string>(j, "kind");
  const auto p = [&] { return dist_from_json(j.at("p")); };
  if (kind == "dist") return DistCase{p()};
  if (kind == "permutation") {
    return PermutationCase{p(), field<std::vector<std::size_t>>(j, "sigma")};
  }
  if (kind == "padding") return PaddingCase{p(), field<std::size_t>(j, "position")};
  if (kind == "refinement") {
    return RefinementCase{Refinement{dist_from_json(j.at("parent")),
                                     field<std::size_t>(j, "index"),
                                     field<std::vector<double>>(j, "parts")}};
  }
  if (kind == "product") return ProductCase{p(), dist_from_json(j.at("q"))};
  if (kind == "joint") return JointCase{p(), rows_from_json(j.at("rows"))};
  if (kind == "uniform_pair") {
    return UniformPairCase{field<std::size_t>(j, "smaller"),
                           field<std::size_t>(j, "larger")};
  }
  if (kind == "direction") {
    return DirectionCase{p(), field<std::vector<double>>(j, "direction")};
  }
  throw Error(ErrorCode::parse_error, "unknown instance kind '" + kind + "'");
}

Json to_json(const Measurement& m) {
  return Json{{"lhs", m.lhs}, {"rhs", m.rhs}, {"margin", m.margin},
              {"relation", m.relation}};
}

Measurement measurement_from_json(const Json& j) {
  return Measurement{field<double>(j, "lhs"), field<double>(j, "rhs"),
                     field<double>(j, "margin"), field<std::string>(j, "relation")};
}

Json to_json(const Verdict& v) {
  Json j{{"axiom", to_string(v.axiom)},
         {"spec", to_json(v.spec)},
         {"status", to_string(v.status)},
         {"advisory", v.advisory},
         {"trials_run", v.trials_run},
         {"fixed_cases", v.fixed_cases},
         {"worst_margin", v.worst_margin},
         {"marginal_cases", v.marginal_cases}};
  if (v.status != Status::counterexample) {
    j["summary"] = "no counterexample in " + std::to_string(v.trials_run) + " trials";
  }
  if (v.witness) {
    j["witness"] = Json{{"instance", to_json(v.witness->instance)},
                        {"measurement", to_json(v.witness->measurement)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.axiom = parse_axiom(field<std::string>(j, "axiom"));
  v.spec = spec_from_json(j.at("spec"));
  const auto status = field<std::string>(j, "status");
  if (status == "counterexample") v.status = Status::counterexample;
  else if (status == "marginal") v.status = Status::marginal;
  else v.status = Status::consistent;
  v.advisory = field<bool>(j, "advisory");
  v.trials_run = field<std::size_t>(j, "trials_run");
  v.fixed_cases = field<std::size_t>(j, "fixed_cases");
  v.worst_margin = field<double>(j, "worst_margin");
  v.marginal_cases = field<std::size_t>(j, "marginal_cases");
  if (j.contains("witness") && !j.at("witness").is_null()) {
    const Json& w = j.at("witness");
    v.witness = Witness{instance_from_json(w.at("instance")),
                        measurement_from_json(w.at("measurement"))};
  }
  return v;
}

Json to_json(const SuiteResult& s) {
  Json verdicts = Json::array();
  for (const SuiteVerdict& sv : s.verdicts) {
    Json v = to_json(sv.verdict);
    v["role"] = to_string(sv.role);
    verdicts.push_back(std::move(v));
  }
  return Json{{"suite", to_string(s.suite)}, {"passed", s.passed},
              {"verdicts", std::move(verdicts)}};
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& x) {
  if (!x) return nullptr;
  if constexpr (std::is_same_v<T, GoldClaim>) {
    return to_string(*x);
  } else if constexpr (std::is_same_v<T, Verdict>) {
    return to_json(*x);
  } else {
    return *x;
  }
}

}  // namespace

Json to_json(const ClassificationRecord& r) {
  Json suites = Json::array();
  for (const SuiteResult& s : r.suites) suites.push_back(to_json(s));
  return Json{{"spec", to_json(r.spec)},
              {"label", to_string(r.label)},
              {"gold", optional_json(r.gold)},
              {"agrees_with_paper", optional_json(r.agrees_with_paper)},
              {"subsumption_consistent", r.subsumption_consistent},
              {"suites", std::move(suites)},
              {"probe", optional_json(r.probe)},
              {"probe_error", optional_json(r.probe_error)},
              {"error", optional_json(r.error)}};
}

Json to_json(const GoldSummary& summary,
             std::span<const ClassificationRecord> records) {
  Json families = Json::object();
  for (const auto& [name, tally] : summary.per_family) {
    families[name] = Json{{"agreements", tally.agreements},
                          {"disagreements", tally.disagreements},
                          {"ungraded", tally.ungraded}};
  }
  Json disagreements = Json::array();
  for (std::size_t i : summary.disagreements) {
    const ClassificationRecord& r = records[i];
    // Evidence: every failing non-advisory verdict with its witness.
    Json evidence = Json::array();
    for (const SuiteResult& s : r.suites) {
      for (const SuiteVerdict& sv : s.verdicts) {
        if (sv.role == Role::advisory || sv.verdict.passed()) continue;
        Json v = to_json(sv.verdict);
        v["suite"] = to_string(s.suite);
        evidence.push_back(std::move(v));
      }
    }
    disagreements.push_back(Json{{"index", i},
                                 {"spec", to_json(r.spec)},
                                 {"label", to_string(r.label)},
                                 {"gold", optional_json(r.gold)},
                                 {"evidence", std::move(evidence)}});
  }
  return Json{{"success", summary.success()},
              {"per_family", std::move(families)},
              {"disagreements", std::move(disagreements)},
              {"errors", summary.errors}};
}

Json to_json(const Report& report) {
  Json specs = Json::array();
  for (const EntropySpec& s : report.specs) specs.push_back(to_json(s));
  return Json{{"tool", kToolName},
              {"version", kToolVersion},
              {"timestamp", utc_timestamp()},
              {"runtime_ms", report.runtime_ms},
              {"command", report.command},
              {"config", to_json(report.config)},
              {"specs", std::move(specs)},
              {"payload", report.payload}};
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

const char* pass_fail(const ClassificationRecord& r, Suite s) {
  const SuiteResult* res = r.suite(s);
  if (!res) return "-";
  return res->passed ? "pass" : "fail";
}

std::string probe_cell(const ClassificationRecord& r) {
  if (r.probe_error) return "degenerate";
  if (!r.probe) return "-";
  return r.probe->passed() ? "pass" : "fail";
}

std::string gold_cell(const ClassificationRecord& r) {
  return r.gold ? std::string(to_string(*r.gold)) : "-";
}

std::string agree_cell(const ClassificationRecord& r) {
  if (!r.agrees_with_paper) return "-";
  return *r.agrees_with_paper ? "yes" : "NO";
}

std::string param_cell(const ClassificationRecord& r) {
  std::string s = format_double(r.spec.param);
  if (r.spec.family == Family::hybrid_eq10) {
    s += " (" + std::string(to_string(r.spec.eq10_variant)) + ")";
  }
  return s;
}

}  // namespace

std::string classification_csv(std::span<const ClassificationRecord> records) {
  std::ostringstream out;
  out << "family,param,scale,eq10_variant,label,upper,lower,weak_upper,weak_lower,"
         "probe,gold,agrees,error\n";
  for (const ClassificationRecord& r : records) {
    out << to_string(r.spec.family) << ',' << format_double(r.spec.param) << ','
        << format_double(r.spec.scale) << ',' << to_string(r.spec.eq10_variant) << ','
        << (r.error ? "error" : to_string(r.label)) << ','
        << pass_fail(r, Suite::upper) << ',' << pass_fail(r, Suite::lower) << ','
        << pass_fail(r, Suite::weak_upper) << ',' << pass_fail(r, Suite::weak_lower)
        << ',' << probe_cell(r) << ',' << gold_cell(r) << ',' << agree_cell(r) << ','
        << '"' << (r.error ? *r.error : "") << "\"\n";
  }
  return out.str();
}

std::string classification_markdown(std::span<const ClassificationRecord> records,
                                    const GoldSummary& summary) {
  std::ostringstream out;
  out << "| family | param | label | upper | lower | weak_upper | weak_lower | "
         "probe | claimed | agrees |\n"
      << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const ClassificationRecord& r : records) {
    out << "| " << to_string(r.spec.family) << " | " << param_cell(r) << " | "
        << (r.error ? "error" : to_string(r.label)) << " | "
        << pass_fail(r, Suite::upper) << " | " << pass_fail(r, Suite::lower) << " | "
        << pass_fail(r, Suite::weak_upper) << " | " << pass_fail(r, Suite::weak_lower)
        << " | " << probe_cell(r) << " | " << gold_cell(r) << " | " << agree_cell(r)
        << " |\n";
  }
  out << "\nDisagreements with the claimed classification: "
      << summary.disagreements.size() << '\n';
  return out.str();
}

std::string verdict_text(const Verdict& v, std::string_view indent,
                         std::string_view tag) {
  std::ostringstream out;
  out << indent << to_string(v.axiom);
  if (!tag.empty()) out << " [" << tag << ']';
  out << ": " << to_string(v.status);
  if (v.status == Status::counterexample) {
    out << " after " << v.trials_run << " trials";
  } else {
    out << " (no counterexample in " << v.trials_run << " trials";
    if (v.fixed_cases > 0) out << " and " << v.fixed_cases << " fixed cases";
    out << ')';
  }
  out << '\n';
  if (v.witness && v.status != Status::consistent) {
    const Measurement& m = v.witness->measurement;
    out << indent << "  witness: " << to_json(v.witness->instance).dump() << '\n'
        << indent << "  " << m.relation << ": lhs " << format_double(m.lhs)
        << ", rhs " << format_double(m.rhs) << ", margin "
        << format_double(m.margin) << '\n';
  }
  return out.str();
}

std::string suite_text(const SuiteResult& s) {
  std::ostringstream out;
  out << to_string(s.suite) << ": " << (s.passed ? "PASS" : "FAIL") << '\n';
  for (const SuiteVerdict& sv : s.verdicts) {
    out << verdict_text(sv.verdict, "  ", to_string(sv.role));
  }
  return out.str();
}

std::string classification_text(std::span<const ClassificationRecord> records,
                                const GoldSummary& summary) {
  std::ostringstream out;
  for (const ClassificationRecord& r : records) {
    out << r.spec.label() << ": ";
    if (r.error) {
      out << "error: " << *r.error << '\n';
      continue;
    }
    out << to_string(r.label);
    if (r.gold) {
      out << " (claimed " << to_string(*r.gold) << ", "
          << (*r.agrees_with_paper ? "agrees" : "DISAGREES") << ')';
    }
    out << '\n';
  }
  out << "disagreements: " << summary.disagreements.size() << '\n';
  return out.str();
}

}  // namespace entaxiom
