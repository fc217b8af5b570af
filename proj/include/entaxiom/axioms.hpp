#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "entaxiom/entropy.hpp"
#include "entaxiom/simplex.hpp"

namespace entaxiom {

enum class AxiomId {
  zero_iff_degenerate,
  symmetry,
  upper_increasing,            // two-sided refinement bound
  lower_increasing,            // reversed refinement bound
  maximum,                     // H(p) <= H(uniform(N))
  expansibility,               // zero padding leaves H unchanged
  symmetric_expansibility,
  upper_subadditivity,         // independent joint, <=
  upper_strong_subadditivity,  // conditional joint, <=
  lower_strong_subadditivity,  // conditional joint, >=
  weak_subadditivity,
  weak_superadditivity,
  extremal_monotonicity,       // H(uniform(N)) non-decreasing in N
  continuity_smoke,
  shannon_equivalence,         // proportionality probe, not a suite member
};

inline constexpr std::array kAllAxioms = {
    AxiomId::zero_iff_degenerate,        AxiomId::symmetry,
    AxiomId::upper_increasing,           AxiomId::lower_increasing,
    AxiomId::maximum,                    AxiomId::expansibility,
    AxiomId::symmetric_expansibility,    AxiomId::upper_subadditivity,
    AxiomId::upper_strong_subadditivity, AxiomId::lower_strong_subadditivity,
    AxiomId::weak_subadditivity,         AxiomId::weak_superadditivity,
    AxiomId::extremal_monotonicity,      AxiomId::continuity_smoke,
    AxiomId::shannon_equivalence,
};

std::string_view to_string(AxiomId a) noexcept;
/// Throws BadConfig on an unknown name.
AxiomId parse_axiom(std::string_view name);

struct CheckConfig {
  std::size_t trials = 10'000;
  std::size_t max_n = 8;
  std::uint64_t seed = 42;
  double tol_eq = 1e-9;
  double tol_violation = 1e-7;
  std::size_t hill_climb_steps = 200;
  std::size_t max_n_uniform = 64;
  /// 0 picks std::thread::hardware_concurrency(). Never changes results.
  std::size_t threads = 0;

  /// Throws BadConfig.
  void validate() const;
};

// Concrete instances an axiom predicate is evaluated on. Every index is
// 0-based.

struct DistCase {
  Dist p;
};
struct PermutationCase {
  Dist p;
  std::vector<std::size_t> sigma;
};
struct PaddingCase {
  Dist p;
  std::size_t position = 0;
};
struct RefinementCase {
  Refinement r;
};
struct ProductCase {
  Dist p;
  Dist q;
};
struct JointCase {
  Dist p;
  CondDist c;
};
struct UniformPairCase {
  std::size_t smaller = 1;
  std::size_t larger = 2;
};
struct DirectionCase {
  Dist p;
  std::vector<double> direction;
};

using Instance = std::variant<DistCase, PermutationCase, PaddingCase,
                              RefinementCase, ProductCase, JointCase,
                              UniformPairCase, DirectionCase>;

std::string_view instance_kind(const Instance& instance) noexcept;

/// Off the degenerate points |H| must exceed this.
inline constexpr double kZeroEntropyFloor = 1e-7;

/// Lipschitz bound used by the advisory continuity probe.
inline constexpr double kContinuityLipschitz = 1e3;

/// One predicate evaluation. The predicate holds when margin <= 0; a
/// positive margin is the amount by which it is violated.
struct Measurement {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::string relation;
};

/// Evaluates the predicate of `axiom` for `spec` on one instance. Throws
/// BadConfig if the instance kind does not fit the axiom.
Measurement measure(const EntropySpec& spec, AxiomId axiom,
                    const Instance& instance);

struct Witness {
  Instance instance;
  Measurement measurement;
};

enum class Status { consistent, marginal, counterexample };
std::string_view to_string(Status s) noexcept;

struct Verdict {
  AxiomId axiom = AxiomId::symmetry;
  EntropySpec spec;
  Status status = Status::consistent;
  /// Random and seeded-grid trials examined. Equals cfg.trials unless the
  /// search stopped at a counterexample.
  std::size_t trials_run = 0;
  /// Exhaustive deterministic cases checked in addition to the trials.
  std::size_t fixed_cases = 0;
  /// Largest margin over all examined cases before any hill climbing.
  double worst_margin = 0.0;
  /// Violations that stayed between tol_eq and tol_violation.
  std::size_t marginal_cases = 0;
  std::optional<Witness> witness;
  /// Advisory verdicts never decide a suite.
  bool advisory = false;

  bool passed() const noexcept { return status != Status::counterexample; }
};

/// Samples cfg.trials instances (seeded grid first), stops at the first
/// violation that survives hill climbing past tol_violation.
Verdict check(const EntropySpec& spec, AxiomId axiom, const CheckConfig& cfg);

/// Local search that only accepts margin increases. Returns the input when
/// nothing improves or the instance has no continuous freedom.
Witness hill_climb(const Witness& witness, const EntropySpec& spec,
                   AxiomId axiom, std::size_t steps, std::uint64_t seed);

/// Re-evaluates a stored witness from its distributions.
Measurement reverify(const Verdict& verdict);

enum class Suite { upper, lower, weak_upper, weak_lower };
std::string_view to_string(Suite s) noexcept;
/// Accepts "weak_upper" and "weak-upper". Throws BadConfig.
Suite parse_suite(std::string_view name);

enum class Role { axiom, corollary, advisory };
std::string_view to_string(Role r) noexcept;

struct SuiteMember {
  AxiomId axiom;
  Role role;
};

std::span<const SuiteMember> suite_members(Suite suite);

struct SuiteVerdict {
  Verdict verdict;
  Role role = Role::axiom;
};

struct SuiteResult {
  Suite suite = Suite::upper;
  std::vector<SuiteVerdict> verdicts;
  /// No counterexample among the axiom and corollary members.
  bool passed = true;
};

SuiteResult run_suite(const EntropySpec& spec, Suite suite,
                      const CheckConfig& cfg);

/// Builds a suite result from verdicts computed elsewhere (the classifier
/// shares them between suites). Throws BadConfig if a member is missing.
SuiteResult assemble_suite(Suite suite, std::span<const Verdict> pool);

/// Checks H(p) against c * Shannon(p), c = H(uniform(2)) / ln 2.
/// Throws DegenerateScale when H(uniform(2)) <= tol_eq.
Verdict shannon_equivalence_probe(const EntropySpec& spec,
                                  const CheckConfig& cfg);

}  // namespace entaxiom
