// Axiom predicates: one Measurement per (spec, axiom, instance).

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "entaxiom/axioms.hpp"
#include "entaxiom/error.hpp"

namespace entaxiom {

namespace {

constexpr std::array<std::string_view, 15> kAxiomNames = {
    "zero_iff_degenerate",        "symmetry",
    "upper_increasing",           "lower_increasing",
    "maximum",                    "expansibility",
    "symmetric_expansibility",    "upper_subadditivity",
    "upper_strong_subadditivity", "lower_strong_subadditivity",
    "weak_subadditivity",         "weak_superadditivity",
    "extremal_monotonicity",      "continuity_smoke",
    "shannon_equivalence",
};

}  // namespace

std::string_view to_string(AxiomId a) noexcept {
  return kAxiomNames[static_cast<std::size_t>(a)];
}

AxiomId parse_axiom(std::string_view name) {
  for (AxiomId a : kAllAxioms) {
    if (to_string(a) == name) return a;
  }
  throw Error(ErrorCode::bad_config, "unknown axiom '" + std::string(name) + "'");
}

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::consistent: return "consistent";
    case Status::marginal: return "marginal";
    case Status::counterexample: return "counterexample";
  }
  return "unknown";
}

std::string_view instance_kind(const Instance& instance) noexcept {
  constexpr std::array<std::string_view, 8> kinds = {
      "dist", "permutation", "padding", "refinement",
      "product", "joint", "uniform_pair", "direction"};
  return kinds[instance.index()];
}

void CheckConfig::validate() const {
  if (trials < 1) throw Error(ErrorCode::bad_config, "trials must be >= 1");
  if (max_n < 2) throw Error(ErrorCode::bad_config, "max_n must be >= 2");
  if (max_n_uniform < 2) {
    throw Error(ErrorCode::bad_config, "max_n_uniform must be >= 2");
  }
  if (!(tol_eq > 0.0) || !(tol_violation > tol_eq)) {
    throw Error(ErrorCode::bad_config, "need tol_violation > tol_eq > 0");
  }
}

namespace {

double h(const EntropySpec& spec, const Dist& p) {
  return entropy_of(spec, p.weights());
}

template <class Case>
const Case& expect(const Instance& instance, AxiomId axiom) {
  if (const auto* c = std::get_if<Case>(&instance)) return *c;
  throw Error(ErrorCode::bad_config,
              std::string("instance kind '") +
                  std::string(instance_kind(instance)) + "' does not fit " +
                  std::string(to_string(axiom)));
}

Measurement le(double lhs, double rhs, std::string relation) {
  return {lhs, rhs, lhs - rhs, std::move(relation)};
}

Measurement equal(double lhs, double rhs, std::string relation) {
  return {lhs, rhs, std::abs(lhs - rhs), std::move(relation)};
}

struct RefinementTerms {
  double increment;
  double bound;
};

RefinementTerms refinement_terms(const EntropySpec& spec, const Refinement& r) {
  const double increment = h(spec, refine(r)) - h(spec, r.parent);
  const double mass = r.parent[r.index];
  // p_n * H(child) is 0 by continuous extension when p_n vanishes.
  const double bound = mass <= kTolNorm ? 0.0 : mass * h(spec, conditional_child(r));
  return {increment, bound};
}

Measurement zero_iff_degenerate(const EntropySpec& spec, const Dist& p) {
  const double value = std::abs(h(spec, p));
  if (p.is_degenerate()) {
    return {value, 0.0, value, "|H(degenerate)| = 0"};
  }
  // Off the point masses the entropy has to stay away from zero; when it
  // does not, report how far the offending point is from degenerate.
  const double spread =
      1.0 - *std::max_element(p.weights().begin(), p.weights().end());
  return {value, kZeroEntropyFloor, value <= kZeroEntropyFloor ? spread : -value,
          "|H(p)| > floor for non-degenerate p"};
}

Measurement continuity(const EntropySpec& spec, const DirectionCase& c) {
  const double base = h(spec, c.p);
  double worst_ratio = 0.0;
  for (double t : {1e-3, 1e-4, 1e-5}) {
    std::vector<double> moved(c.p.size());
    for (std::size_t i = 0; i < moved.size(); ++i) {
      moved[i] = c.p[i] + t * c.direction[i];
    }
    worst_ratio = std::max(worst_ratio, std::abs(h(spec, make_dist(moved)) - base) / t);
  }
  return le(worst_ratio, kContinuityLipschitz, "|H(p + t d) - H(p)| / t <= L");
}

}  // namespace

Measurement measure(const EntropySpec& spec, AxiomId axiom,
                    const Instance& instance) {
  switch (axiom) {
    case AxiomId::zero_iff_degenerate:
      return zero_iff_degenerate(spec, expect<DistCase>(instance, axiom).p);

    case AxiomId::symmetry: {
      const auto& c = expect<PermutationCase>(instance, axiom);
      return equal(h(spec, permute(c.p, c.sigma)), h(spec, c.p),
                   "H(permuted p) = H(p)");
    }

    case AxiomId::upper_increasing: {
      const auto& c = expect<RefinementCase>(instance, axiom);
      const auto [increment, bound] = refinement_terms(spec, c.r);
      if (increment - bound >= -increment) {
        return le(increment, bound, "H(refined) - H(parent) <= p_n H(child)");
      }
      return le(0.0, increment, "0 <= H(refined) - H(parent)");
    }

    case AxiomId::lower_increasing: {
      const auto& c = expect<RefinementCase>(instance, axiom);
      const auto [increment, bound] = refinement_terms(spec, c.r);
      return le(bound, increment, "H(refined) - H(parent) >= p_n H(child)");
    }

    case AxiomId::maximum: {
      const auto& c = expect<DistCase>(instance, axiom);
      return le(h(spec, c.p), h(spec, uniform(c.p.size())),
                "H(p) <= H(uniform(N))");
    }

    case AxiomId::expansibility:
    case AxiomId::symmetric_expansibility: {
      const auto& c = expect<PaddingCase>(instance, axiom);
      return equal(h(spec, pad_zero(c.p, c.position)), h(spec, c.p),
                   "H(p with a zero inserted) = H(p)");
    }

    case AxiomId::upper_subadditivity:
    case AxiomId::weak_subadditivity: {
      const auto& c = expect<ProductCase>(instance, axiom);
      return le(h(spec, product(c.p, c.q)), h(spec, c.p) + h(spec, c.q),
                "H(p x q) <= H(p) + H(q)");
    }

    case AxiomId::weak_superadditivity: {
      const auto& c = expect<ProductCase>(instance, axiom);
      return le(h(spec, c.p) + h(spec, c.q), h(spec, product(c.p, c.q)),
                "H(p x q) >= H(p) + H(q)");
    }

    case AxiomId::upper_strong_subadditivity: {
      const auto& c = expect<JointCase>(instance, axiom);
      return le(h(spec, joint(c.p, c.c)),
                h(spec, c.p) + conditional_entropy(spec, c.p, c.c),
                "H(joint) <= H(p) + H(Y/X)");
    }

    case AxiomId::lower_strong_subadditivity: {
      const auto& c = expect<JointCase>(instance, axiom);
      return le(h(spec, c.p) + conditional_entropy(spec, c.p, c.c),
                h(spec, joint(c.p, c.c)), "H(joint) >= H(p) + H(Y/X)");
    }

    case AxiomId::extremal_monotonicity: {
      const auto& c = expect<UniformPairCase>(instance, axiom);
      return le(h(spec, uniform(c.smaller)), h(spec, uniform(c.larger)),
                "H(uniform(n)) <= H(uniform(m)) for n < m");
    }

    case AxiomId::continuity_smoke:
      return continuity(spec, expect<DirectionCase>(instance, axiom));

    case AxiomId::shannon_equivalence: {
      const auto& c = expect<DistCase>(instance, axiom);
      const double factor = h(spec, uniform(2)) / std::numbers::ln2;
      const EntropySpec shannon{Family::shannon};
      const double lhs = h(spec, c.p);
      const double rhs = factor * h(shannon, c.p);
      return {lhs, rhs, std::abs(lhs - rhs) / (1.0 + std::abs(factor)),
              "H(p) = c * Shannon(p), c = H(uniform(2)) / ln 2"};
    }
  }
  throw Error(ErrorCode::bad_config, "unhandled axiom");
}

}  // namespace entaxiom
