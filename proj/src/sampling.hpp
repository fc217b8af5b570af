#pragma once

#include <vector>

#include "entaxiom/axioms.hpp"
#include "entaxiom/random.hpp"

namespace entaxiom::detail {

/// Exhaustive cases checked on top of the trial budget: the point masses for
/// zero_iff_degenerate, consecutive uniform sizes for extremal_monotonicity.
std::vector<Instance> fixed_instances(AxiomId axiom, const CheckConfig& cfg);

/// Hand-picked cases run as the first trials: two-atom skewed points,
/// uniform points and near-degenerate points of every size.
std::vector<Instance> grid_instances(AxiomId axiom, const CheckConfig& cfg);

/// One random trial.
Instance random_instance(AxiomId axiom, const CheckConfig& cfg, Rng& rng);

/// Simplex points a local search may move, and the inverse.
std::vector<std::vector<double>> free_blocks(const Instance& instance);
Instance rebuild(const Instance& proto,
                 const std::vector<std::vector<double>>& blocks);

}  // namespace entaxiom::detail
