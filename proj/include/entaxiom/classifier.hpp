#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entaxiom/axioms.hpp"
#include "entaxiom/entropy.hpp"

namespace entaxiom {

/// Listed in precedence order, strongest first.
enum class Label {
  shannon_equivalent,
  upper,
  lower,
  weak_both,
  weak_upper,
  weak_lower,
  none,
};

std::string_view to_string(Label l) noexcept;

/// What the published classification claims for one parameter range.
/// `not_strong` means only "neither upper nor lower" is asserted.
enum class GoldClaim {
  shannon_equivalent,
  upper,
  lower,
  weak_both,
  weak_upper,
  weak_lower,
  not_strong,
};

std::string_view to_string(GoldClaim g) noexcept;
bool satisfies(Label label, GoldClaim claim) noexcept;

struct ParamRange {
  double lo;
  bool lo_closed;
  double hi;
  bool hi_closed;

  bool contains(double x) const noexcept;
};

struct GoldRow {
  Family family;
  ParamRange range;
  GoldClaim claim;
};

/// Every classification claim of the source, one row per family and range.
std::span<const GoldRow> gold_table();

/// The row covering `spec`, if any. Shannon is covered at any parameter.
std::optional<GoldRow> gold_lookup(const EntropySpec& spec);

struct ClassificationRecord {
  EntropySpec spec;
  Label label = Label::none;
  std::vector<SuiteResult> suites;
  std::optional<Verdict> probe;
  std::optional<std::string> probe_error;
  std::optional<GoldClaim> gold;
  std::optional<bool> agrees_with_paper;
  /// upper implies weak_upper passed, lower implies weak_lower passed.
  bool subsumption_consistent = true;
  /// Set when the grid point itself was invalid; nothing else is filled in.
  std::optional<std::string> error;

  const SuiteResult* suite(Suite s) const noexcept;
};

/// Deterministic label from the four suites and the optional probe.
Label assign_label(bool upper, bool lower, bool weak_upper, bool weak_lower,
                   bool probe_passed) noexcept;

ClassificationRecord classify(const EntropySpec& spec, const CheckConfig& cfg);

inline constexpr std::array kDefaultGrid = {0.25, 0.5, 0.75, 1.5, 2.0, 3.0, 4.0};

/// One record per grid point, in grid order. Invalid points produce a record
/// with `error` set instead of aborting the sweep.
std::vector<ClassificationRecord> sweep(
    Family family, std::span<const double> grid, const CheckConfig& cfg,
    Eq10Variant variant = Eq10Variant::corrected);

/// Default grid, plus the endpoint 1 where a gold row claims it.
std::vector<double> default_grid(Family family);

/// Every family over its default grid (Shannon once).
std::vector<ClassificationRecord> classify_all(const CheckConfig& cfg);

struct FamilyTally {
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t ungraded = 0;
};

struct GoldSummary {
  std::map<std::string, FamilyTally> per_family;
  /// Indices into the record list passed to gold_report.
  std::vector<std::size_t> disagreements;
  std::vector<std::size_t> errors;

  /// Invalid grid points are listed but do not count as disagreements.
  bool success() const noexcept { return disagreements.empty(); }
};

GoldSummary gold_report(std::span<const ClassificationRecord> records);

}  // namespace entaxiom
