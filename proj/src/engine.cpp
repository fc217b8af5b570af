#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>

#include "entaxiom/axioms.hpp"
#include "entaxiom/error.hpp"
#include "sampling.hpp"

namespace entaxiom {

namespace {

// Trials are evaluated in blocks so a counterexample found early stops the
// search without wasting the rest of the budget.
constexpr std::size_t kBlock = 1024;
// Gap cases (tol_eq < margin <= tol_violation) get a longer climb; only the
// first few, since a family hugging an equality produces many of them.
constexpr std::size_t kGapRetries = 8;
constexpr std::size_t kGapStepFactor = 4;

constexpr std::uint64_t kTrialStream = 0x7472'6961'6c00;   // "trial"
constexpr std::uint64_t kClimbStream = 0x636c'696d'6200;   // "climb"

std::size_t worker_count(const CheckConfig& cfg) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  return cfg.threads == 0 ? hw : cfg.threads;
}

template <class Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn&& fn) {
  workers = std::min(workers, n / 16 + 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            fn(i);
          } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

struct Evaluated {
  Instance instance;
  Measurement measurement;
};

class Search {
 public:
  Search(const EntropySpec& spec, AxiomId axiom, const CheckConfig& cfg)
      : spec_(spec), axiom_(axiom), cfg_(cfg) {
    verdict_.axiom = axiom;
    verdict_.spec = spec;
    verdict_.advisory = axiom == AxiomId::continuity_smoke;
    verdict_.worst_margin = -std::numeric_limits<double>::infinity();
  }

  Verdict run() {
    const std::vector<Instance> fixed = detail::fixed_instances(axiom_, cfg_);
    const std::vector<Instance> grid = detail::grid_instances(axiom_, cfg_);

    std::vector<Evaluated> batch = evaluate_all(fixed.size(), [&](std::size_t i) {
      return fixed[i];
    });
    verdict_.fixed_cases = fixed.size();
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (inspect(batch[i], kFixedTag + i)) return finish();
    }

    for (std::size_t start = 0; start < cfg_.trials; start += kBlock) {
      const std::size_t count = std::min(kBlock, cfg_.trials - start);
      batch = evaluate_all(count, [&](std::size_t i) -> Instance {
        const std::size_t t = start + i;
        if (t < grid.size()) return grid[t];
        Rng rng(derive_seed(cfg_.seed, kTrialStream + static_cast<std::uint64_t>(axiom_), t));
        return detail::random_instance(axiom_, cfg_, rng);
      });
      for (std::size_t i = 0; i < count; ++i) {
        verdict_.trials_run = start + i + 1;
        if (inspect(batch[i], start + i)) return finish();
      }
    }
    return finish();
  }

 private:
  static constexpr std::uint64_t kFixedTag = std::uint64_t{1} << 62;

  template <class Make>
  std::vector<Evaluated> evaluate_all(std::size_t count, Make&& make) {
    std::vector<std::optional<Evaluated>> slots(count);
    parallel_for(count, worker_count(cfg_), [&](std::size_t i) {
      Instance instance = make(i);
      Measurement m = measure(spec_, axiom_, instance);
      slots[i].emplace(Evaluated{std::move(instance), std::move(m)});
    });
    std::vector<Evaluated> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
  }

  // True when a counterexample is settled.
  bool inspect(const Evaluated& e, std::uint64_t tag) {
    const double margin = e.measurement.margin;
    verdict_.worst_margin = std::max(verdict_.worst_margin, margin);
    if (!(margin > cfg_.tol_eq)) return false;

    const Witness start{e.instance, e.measurement};
    Witness best = hill_climb(start, spec_, axiom_, cfg_.hill_climb_steps,
                              derive_seed(cfg_.seed, kClimbStream, tag));
    if (best.measurement.margin <= cfg_.tol_violation && gap_retries_ < kGapRetries) {
      ++gap_retries_;
      best = hill_climb(best, spec_, axiom_, kGapStepFactor * cfg_.hill_climb_steps,
                        derive_seed(cfg_.seed, kClimbStream + 1, tag));
    }
    if (best.measurement.margin > cfg_.tol_violation) {
      verdict_.status = Status::counterexample;
      verdict_.witness = std::move(best);
      return true;
    }
    ++verdict_.marginal_cases;
    if (!verdict_.witness) verdict_.witness = std::move(best);
    return false;
  }

  Verdict finish() {
    if (verdict_.status != Status::counterexample && verdict_.marginal_cases > 0) {
      verdict_.status = Status::marginal;
    }
    if (!std::isfinite(verdict_.worst_margin)) verdict_.worst_margin = 0.0;
    return std::move(verdict_);
  }

  const EntropySpec& spec_;
  AxiomId axiom_;
  const CheckConfig& cfg_;
  Verdict verdict_;
  std::size_t gap_retries_ = 0;
};

}  // namespace

Witness hill_climb(const Witness& witness, const EntropySpec& spec,
                   AxiomId axiom, std::size_t steps, std::uint64_t seed) {
  Witness best = witness;
  std::vector<std::vector<double>> blocks = detail::free_blocks(best.instance);
  std::vector<std::size_t> movable;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].size() >= 2) movable.push_back(b);
  }
  if (movable.empty()) return best;

  Rng rng(seed);
  double step = 0.05;
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t b = movable[rng.uniform_int(0, movable.size() - 1)];
    const std::size_t i = rng.uniform_int(0, blocks[b].size() - 1);
    const double delta = step * (2.0 * rng.uniform01() - 1.0);

    std::vector<std::vector<double>> trial = blocks;
    auto& block = trial[b];
    block[i] = std::max(0.0, block[i] + delta);
    double total = 0.0;
    for (double x : block) total += x;
    if (!(total > 0.0)) continue;
    for (double& x : block) x /= total;

    try {
      Instance candidate = detail::rebuild(best.instance, trial);
      Measurement m = measure(spec, axiom, candidate);
      if (m.margin > best.measurement.margin) {
        best = Witness{std::move(candidate), std::move(m)};
        blocks = detail::free_blocks(best.instance);
        step = std::min(step * 1.5, 0.5);
        continue;
      }
    } catch (const Error&) {
      // a move that leaves the feasible set is just a rejected move
    }
    step = std::max(step * 0.8, 1e-6);
  }
  return best;
}

Verdict check(const EntropySpec& spec, AxiomId axiom, const CheckConfig& cfg) {
  spec.validate();
  cfg.validate();
  return Search(spec, axiom, cfg).run();
}

Measurement reverify(const Verdict& verdict) {
  if (!verdict.witness) {
    throw Error(ErrorCode::bad_config, "verdict carries no witness");
  }
  return measure(verdict.spec, verdict.axiom, verdict.witness->instance);
}

std::string_view to_string(Suite s) noexcept {
  switch (s) {
    case Suite::upper: return "upper";
    case Suite::lower: return "lower";
    case Suite::weak_upper: return "weak_upper";
    case Suite::weak_lower: return "weak_lower";
  }
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::upper, Suite::lower, Suite::weak_upper, Suite::weak_lower}) {
    std::string dashed(to_string(s));
    std::replace(dashed.begin(), dashed.end(), '_', '-');
    if (name == to_string(s) || name == dashed) return s;
  }
  throw Error(ErrorCode::bad_config, "unknown suite '" + std::string(name) + "'");
}

std::string_view to_string(Role r) noexcept {
  switch (r) {
    case Role::axiom: return "axiom";
    case Role::corollary: return "corollary";
    case Role::advisory: return "advisory";
  }
  return "unknown";
}

std::span<const SuiteMember> suite_members(Suite suite) {
  using enum AxiomId;
  static constexpr SuiteMember upper[] = {
      {zero_iff_degenerate, Role::axiom},
      {symmetry, Role::axiom},
      {upper_increasing, Role::axiom},
      {maximum, Role::axiom},
      {expansibility, Role::corollary},
      {upper_subadditivity, Role::corollary},
      {upper_strong_subadditivity, Role::corollary},
      {extremal_monotonicity, Role::corollary},
      {continuity_smoke, Role::advisory},
  };
  static constexpr SuiteMember lower[] = {
      {zero_iff_degenerate, Role::axiom},
      {symmetric_expansibility, Role::axiom},
      {lower_increasing, Role::axiom},
      {maximum, Role::axiom},
      {lower_strong_subadditivity, Role::corollary},
      {continuity_smoke, Role::advisory},
  };
  static constexpr SuiteMember weak_upper[] = {
      {zero_iff_degenerate, Role::axiom},
      {symmetric_expansibility, Role::axiom},
      {maximum, Role::axiom},
      {weak_subadditivity, Role::axiom},
      {continuity_smoke, Role::advisory},
  };
  static constexpr SuiteMember weak_lower[] = {
      {zero_iff_degenerate, Role::axiom},
      {symmetric_expansibility, Role::axiom},
      {maximum, Role::axiom},
      {weak_superadditivity, Role::axiom},
      {continuity_smoke, Role::advisory},
  };
  switch (suite) {
    case Suite::upper: return upper;
    case Suite::lower: return lower;
    case Suite::weak_upper: return weak_upper;
    case Suite::weak_lower: return weak_lower;
  }
  return {};
}

SuiteResult assemble_suite(Suite suite, std::span<const Verdict> pool) {
  SuiteResult result{suite, {}, true};
  for (const SuiteMember& member : suite_members(suite)) {
    const auto it = std::find_if(pool.begin(), pool.end(), [&](const Verdict& v) {
      return v.axiom == member.axiom;
    });
    if (it == pool.end()) {
      throw Error(ErrorCode::bad_config, "no verdict for " +
                                             std::string(to_string(member.axiom)));
    }
    result.verdicts.push_back({*it, member.role});
    if (member.role != Role::advisory && !it->passed()) result.passed = false;
  }
  return result;
}

SuiteResult run_suite(const EntropySpec& spec, Suite suite, const CheckConfig& cfg) {
  std::vector<Verdict> pool;
  for (const SuiteMember& member : suite_members(suite)) {
    pool.push_back(check(spec, member.axiom, cfg));
  }
  return assemble_suite(suite, pool);
}

Verdict shannon_equivalence_probe(const EntropySpec& spec, const CheckConfig& cfg) {
  spec.validate();
  cfg.validate();
  const double at_two = entropy_of(spec, uniform(2).weights());
  if (at_two <= cfg.tol_eq) {
    throw Error(ErrorCode::degenerate_scale,
                "H(uniform(2)) <= tol_eq, no Shannon multiple to compare with");
  }
  return check(spec, AxiomId::shannon_equivalence, cfg);
}

}  // namespace entaxiom
