#include "entaxiom/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

#include "entaxiom/error.hpp"

namespace entaxiom {

std::string_view to_string(Label l) noexcept {
  switch (l) {
    case Label::shannon_equivalent: return "shannon_equivalent";
    case Label::upper: return "upper";
    case Label::lower: return "lower";
    case Label::weak_both: return "weak_both";
    case Label::weak_upper: return "weak_upper";
    case Label::weak_lower: return "weak_lower";
    case Label::none: return "none";
  }
  return "unknown";
}

std::string_view to_string(GoldClaim g) noexcept {
  switch (g) {
    case GoldClaim::shannon_equivalent: return "shannon_equivalent";
    case GoldClaim::upper: return "upper";
    case GoldClaim::lower: return "lower";
    case GoldClaim::weak_both: return "weak_both";
    case GoldClaim::weak_upper: return "weak_upper";
    case GoldClaim::weak_lower: return "weak_lower";
    case GoldClaim::not_strong: return "not_upper_and_not_lower";
  }
  return "unknown";
}

bool satisfies(Label label, GoldClaim claim) noexcept {
  // A stronger class implies the weaker claims it contains: Shannon is both
  // upper and lower, upper implies weak upper, lower implies weak lower.
  const bool is_upper = label == Label::shannon_equivalent || label == Label::upper;
  const bool is_lower = label == Label::shannon_equivalent || label == Label::lower;
  const bool is_weak_upper =
      is_upper || label == Label::weak_both || label == Label::weak_upper;
  const bool is_weak_lower =
      is_lower || label == Label::weak_both || label == Label::weak_lower;
  switch (claim) {
    case GoldClaim::shannon_equivalent: return label == Label::shannon_equivalent;
    case GoldClaim::upper: return label == Label::upper;
    case GoldClaim::lower: return label == Label::lower;
    case GoldClaim::weak_both: return is_weak_upper && is_weak_lower && !is_upper && !is_lower;
    case GoldClaim::weak_upper: return is_weak_upper;
    case GoldClaim::weak_lower: return is_weak_lower;
    case GoldClaim::not_strong: return !is_upper && !is_lower;
  }
  return false;
}

bool ParamRange::contains(double x) const noexcept {
  const bool above = lo_closed ? x >= lo : x > lo;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr ParamRange kBelowOne{0.0, false, 1.0, false};
constexpr ParamRange kAboveOne{1.0, false, kInf, false};
constexpr ParamRange kOne{1.0, true, 1.0, true};
constexpr ParamRange kPositive{0.0, false, kInf, false};

constexpr GoldRow kGold[] = {
    {Family::shannon, kPositive, GoldClaim::shannon_equivalent},
    {Family::tsallis, kAboveOne, GoldClaim::upper},
    {Family::tsallis, kBelowOne, GoldClaim::lower},
    {Family::daroczy, kAboveOne, GoldClaim::upper},
    {Family::daroczy, kBelowOne, GoldClaim::lower},
    {Family::hybrid_eq10, kAboveOne, GoldClaim::upper},
    {Family::hybrid_eq10, kBelowOne, GoldClaim::lower},
    {Family::abe, kBelowOne, GoldClaim::not_strong},
    {Family::abe, kAboveOne, GoldClaim::not_strong},
    {Family::renyi, kBelowOne, GoldClaim::weak_both},
    {Family::renyi, kAboveOne, GoldClaim::weak_both},
    {Family::landsberg_vedral, kAboveOne, GoldClaim::weak_lower},
    {Family::landsberg_vedral, kBelowOne, GoldClaim::weak_upper},
    // The closed endpoint 1 of both claims is Shannon itself.
    {Family::power_log_eq19, kAboveOne, GoldClaim::weak_upper},
    {Family::power_log_eq19, kOne, GoldClaim::shannon_equivalent},
    {Family::power_log_eq19, kBelowOne, GoldClaim::weak_lower},
    {Family::weighted_log_eq20, kAboveOne, GoldClaim::weak_upper},
    {Family::weighted_log_eq20, kOne, GoldClaim::shannon_equivalent},
    {Family::weighted_log_eq20, kBelowOne, GoldClaim::weak_lower},
};

// Each axiom shared between suites is checked once per spec.
constexpr AxiomId kPool[] = {
    AxiomId::zero_iff_degenerate,        AxiomId::symmetry,
    AxiomId::upper_increasing,           AxiomId::lower_increasing,
    AxiomId::maximum,                    AxiomId::expansibility,
    AxiomId::symmetric_expansibility,    AxiomId::upper_subadditivity,
    AxiomId::upper_strong_subadditivity, AxiomId::lower_strong_subadditivity,
    AxiomId::weak_subadditivity,         AxiomId::weak_superadditivity,
    AxiomId::extremal_monotonicity,      AxiomId::continuity_smoke,
};

constexpr Suite kSuites[] = {Suite::upper, Suite::lower, Suite::weak_upper,
                             Suite::weak_lower};

}  // namespace

std::span<const GoldRow> gold_table() { return kGold; }

std::optional<GoldRow> gold_lookup(const EntropySpec& spec) {
  for (const GoldRow& row : kGold) {
    if (row.family != spec.family) continue;
    if (spec.family == Family::shannon || row.range.contains(spec.param)) return row;
  }
  return std::nullopt;
}

const SuiteResult* ClassificationRecord::suite(Suite s) const noexcept {
  for (const SuiteResult& r : suites) {
    if (r.suite == s) return &r;
  }
  return nullptr;
}

Label assign_label(bool upper, bool lower, bool weak_upper, bool weak_lower,
                   bool probe_passed) noexcept {
  if (upper && lower && probe_passed) return Label::shannon_equivalent;
  if (upper) return Label::upper;
  if (lower) return Label::lower;
  if (weak_upper && weak_lower) return Label::weak_both;
  if (weak_upper) return Label::weak_upper;
  if (weak_lower) return Label::weak_lower;
  return Label::none;
}

ClassificationRecord classify(const EntropySpec& spec, const CheckConfig& cfg) {
  spec.validate();
  cfg.validate();

  ClassificationRecord record;
  record.spec = spec;

  std::vector<Verdict> pool;
  pool.reserve(std::size(kPool));
  for (AxiomId axiom : kPool) pool.push_back(check(spec, axiom, cfg));
  for (Suite s : kSuites) record.suites.push_back(assemble_suite(s, pool));

  const auto passed = [&](Suite s) { return record.suite(s)->passed; };
  bool probe_passed = false;
  if (passed(Suite::upper) && passed(Suite::lower)) {
    try {
      record.probe = shannon_equivalence_probe(spec, cfg);
      probe_passed = record.probe->passed();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::degenerate_scale) throw;
      record.probe_error = e.what();
    }
  }
  record.label = assign_label(passed(Suite::upper), passed(Suite::lower),
                              passed(Suite::weak_upper), passed(Suite::weak_lower),
                              probe_passed);
  record.subsumption_consistent =
      (record.label != Label::upper || passed(Suite::weak_upper)) &&
      (record.label != Label::lower || passed(Suite::weak_lower));

  if (const auto row = gold_lookup(spec)) {
    record.gold = row->claim;
    record.agrees_with_paper = satisfies(record.label, row->claim);
  }
  return record;
}

std::vector<ClassificationRecord> sweep(Family family, std::span<const double> grid,
                                        const CheckConfig& cfg, Eq10Variant variant) {
  std::vector<ClassificationRecord> out;
  out.reserve(grid.size());
  for (double param : grid) {
    EntropySpec spec{family, param, 1.0, variant};
    try {
      out.push_back(classify(spec, cfg));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::bad_param) throw;
      ClassificationRecord bad;
      bad.spec = spec;
      bad.error = e.what();
      out.push_back(std::move(bad));
    }
  }
  return out;
}

std::vector<double> default_grid(Family family) {
  if (family == Family::shannon) return {1.0};
  std::vector<double> grid(kDefaultGrid.begin(), kDefaultGrid.end());
  const bool endpoint_claimed =
      std::any_of(std::begin(kGold), std::end(kGold), [family](const GoldRow& r) {
        return r.family == family && r.range.lo == 1.0 && r.range.hi == 1.0;
      });
  if (endpoint_claimed) grid.insert(std::upper_bound(grid.begin(), grid.end(), 1.0), 1.0);
  return grid;
}

std::vector<ClassificationRecord> classify_all(const CheckConfig& cfg) {
  std::vector<ClassificationRecord> out;
  for (Family family : kAllFamilies) {
    const std::vector<double> grid = default_grid(family);
    auto records = sweep(family, grid, cfg);
    std::move(records.begin(), records.end(), std::back_inserter(out));
  }
  return out;
}

GoldSummary gold_report(std::span<const ClassificationRecord> records) {
  GoldSummary summary;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const ClassificationRecord& r = records[i];
    FamilyTally& tally = summary.per_family[std::string(to_string(r.spec.family))];
    if (r.error) {
      summary.errors.push_back(i);
      ++tally.ungraded;
    } else if (!r.agrees_with_paper) {
      ++tally.ungraded;
    } else if (*r.agrees_with_paper) {
      ++tally.agreements;
    } else {
      ++tally.disagreements;
      summary.disagreements.push_back(i);
    }
  }
  return summary;
}

}  // namespace entaxiom
