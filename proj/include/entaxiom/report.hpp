#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "entaxiom/axioms.hpp"
#include "entaxiom/classifier.hpp"
#include "entaxiom/entropy.hpp"
#include "entaxiom/simplex.hpp"

namespace entaxiom {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "entaxiom";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

Json to_json(const Dist& p);
Dist dist_from_json(const Json& j);

Json to_json(const EntropySpec& spec);
EntropySpec spec_from_json(const Json& j);

Json to_json(const CheckConfig& cfg);
CheckConfig config_from_json(const Json& j);

/// Tagged by "kind" (see instance_kind); every index is 0-based.
Json to_json(const Instance& instance);
Instance instance_from_json(const Json& j);

Json to_json(const Measurement& m);
Measurement measurement_from_json(const Json& j);

Json to_json(const Verdict& v);
/// Enough of a verdict to re-verify its witness with reverify().
Verdict verdict_from_json(const Json& j);

Json to_json(const SuiteResult& s);
Json to_json(const ClassificationRecord& r);
Json to_json(const GoldSummary& summary,
             std::span<const ClassificationRecord> records);

/// The envelope around every machine-readable result. `payload` depends only
/// on the inputs; the timestamp and runtime live outside it.
struct Report {
  std::string command;
  CheckConfig config;
  std::vector<EntropySpec> specs;
  Json payload;
  double runtime_ms = 0.0;
};

Json to_json(const Report& report);

/// "YYYY-MM-DDTHH:MM:SSZ" for the current time.
std::string utc_timestamp();

std::string classification_csv(std::span<const ClassificationRecord> records);
std::string classification_markdown(std::span<const ClassificationRecord> records,
                                     const GoldSummary& summary);

std::string verdict_text(const Verdict& v, std::string_view indent = "",
                         std::string_view tag = "");
std::string suite_text(const SuiteResult& s);
std::string classification_text(std::span<const ClassificationRecord> records,
                                const GoldSummary& summary);

}  // namespace entaxiom
