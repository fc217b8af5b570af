#include "sampling.hpp"

#include <algorithm>
#include <numeric>

#include "entaxiom/error.hpp"

namespace entaxiom::detail {

namespace {

enum class Shape { dist, permutation, padding, refinement, product, joint,
                   uniform_pair, direction, floored_dist };

Shape shape_of(AxiomId axiom) {
  switch (axiom) {
    case AxiomId::zero_iff_degenerate: return Shape::floored_dist;
    case AxiomId::symmetry: return Shape::permutation;
    case AxiomId::upper_increasing:
    case AxiomId::lower_increasing: return Shape::refinement;
    case AxiomId::maximum:
    case AxiomId::shannon_equivalence: return Shape::dist;
    case AxiomId::expansibility:
    case AxiomId::symmetric_expansibility: return Shape::padding;
    case AxiomId::upper_subadditivity:
    case AxiomId::weak_subadditivity:
    case AxiomId::weak_superadditivity: return Shape::product;
    case AxiomId::upper_strong_subadditivity:
    case AxiomId::lower_strong_subadditivity: return Shape::joint;
    case AxiomId::extremal_monotonicity: return Shape::uniform_pair;
    case AxiomId::continuity_smoke: return Shape::direction;
  }
  throw Error(ErrorCode::bad_config, "unhandled axiom");
}

constexpr double kInteriorFloor = 0.01;

// (1 - eps, eps/(N-1), ..., eps/(N-1))
Dist near_degenerate(std::size_t n, double eps) {
  std::vector<double> w(n, eps / static_cast<double>(n - 1));
  w[0] = 1.0 - eps;
  return make_dist(w);
}

std::vector<Dist> grid_dists(std::size_t max_n) {
  std::vector<Dist> out = {make_dist({0.9, 0.1}), make_dist({0.99, 0.01})};
  for (std::size_t n = 2; n <= max_n; ++n) {
    out.push_back(uniform(n));
    out.push_back(near_degenerate(n, 0.1));
    out.push_back(near_degenerate(n, 1e-3));
  }
  return out;
}

Dist interior_sample(std::size_t n, Rng& rng) {
  const Dist u = sample_random(n, rng);
  const double room = 1.0 - kInteriorFloor * static_cast<double>(n);
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = kInteriorFloor + room * u[i];
  return make_dist(w);
}

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(sigma[i - 1], sigma[rng.uniform_int(0, i - 1)]);
  }
  return sigma;
}

Refinement split(const Dist& parent, std::size_t index, const Dist& child) {
  std::vector<double> parts(child.size());
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = parent[index] * child[i];
  return Refinement{parent, index, std::move(parts)};
}

std::vector<double> zero_sum_direction(std::size_t n, Rng& rng) {
  std::vector<double> d(n);
  for (double& x : d) x = 2.0 * rng.uniform01() - 1.0;
  const double mean = std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(n);
  double peak = 0.0;
  for (double& x : d) {
    x -= mean;
    peak = std::max(peak, std::abs(x));
  }
  for (double& x : d) x /= peak;
  return d;
}

}  // namespace

std::vector<Instance> fixed_instances(AxiomId axiom, const CheckConfig& cfg) {
  std::vector<Instance> out;
  if (axiom == AxiomId::zero_iff_degenerate) {
    for (std::size_t n = 1; n <= cfg.max_n; ++n) {
      for (std::size_t k = 0; k < n; ++k) out.push_back(DistCase{degenerate(n, k)});
    }
  } else if (axiom == AxiomId::extremal_monotonicity) {
    for (std::size_t n = 1; n < cfg.max_n_uniform; ++n) {
      out.push_back(UniformPairCase{n, n + 1});
    }
  }
  return out;
}

std::vector<Instance> grid_instances(AxiomId axiom, const CheckConfig& cfg) {
  const std::vector<Dist> dists = grid_dists(cfg.max_n);
  const std::size_t few = std::min<std::size_t>(dists.size(), 8);
  std::vector<Instance> out;

  switch (shape_of(axiom)) {
    case Shape::dist:
    case Shape::floored_dist:
      for (const Dist& p : dists) out.push_back(DistCase{p});
      break;

    case Shape::permutation:
      for (const Dist& p : dists) {
        std::vector<std::size_t> reversed(p.size());
        std::iota(reversed.rbegin(), reversed.rend(), 0);
        out.push_back(PermutationCase{p, std::move(reversed)});
      }
      break;

    case Shape::padding:
      for (const Dist& p : dists) {
        out.push_back(PaddingCase{p, 0});
        out.push_back(PaddingCase{p, p.size()});
      }
      break;

    case Shape::refinement: {
      const std::vector<Dist> children = {uniform(2), make_dist({0.9, 0.1}),
                                          uniform(3)};
      for (const Dist& p : dists) {
        for (std::size_t index : {std::size_t{0}, p.size() - 1}) {
          for (const Dist& child : children) {
            out.push_back(RefinementCase{split(p, index, child)});
          }
        }
      }
      break;
    }

    case Shape::product:
      for (std::size_t i = 0; i < few; ++i) {
        for (std::size_t j = 0; j < few; ++j) {
          out.push_back(ProductCase{dists[i], dists[j]});
        }
      }
      break;

    case Shape::joint:
      for (std::size_t i = 0; i < few; ++i) {
        const Dist& p = dists[i];
        const std::size_t n = p.size();
        // independent, perfectly correlated, and alternating skewed rows
        out.push_back(JointCase{p, make_cond_dist(std::vector<Dist>(n, uniform(2)))});
        std::vector<Dist> diagonal;
        std::vector<Dist> skewed;
        for (std::size_t r = 0; r < n; ++r) {
          diagonal.push_back(degenerate(n, r));
          skewed.push_back(r % 2 == 0 ? make_dist({0.9, 0.1}) : make_dist({0.1, 0.9}));
        }
        out.push_back(JointCase{p, make_cond_dist(std::move(diagonal))});
        out.push_back(JointCase{p, make_cond_dist(std::move(skewed))});
      }
      break;

    case Shape::uniform_pair:
    case Shape::direction:
      break;
  }
  return out;
}

Instance random_instance(AxiomId axiom, const CheckConfig& cfg, Rng& rng) {
  const auto size = [&] { return rng.uniform_int(2, cfg.max_n); };

  switch (shape_of(axiom)) {
    case Shape::dist:
      return DistCase{sample_random(size(), rng)};

    case Shape::floored_dist:
      return DistCase{interior_sample(size(), rng)};

    case Shape::permutation: {
      Dist p = sample_random(size(), rng);
      auto sigma = random_permutation(p.size(), rng);
      return PermutationCase{std::move(p), std::move(sigma)};
    }

    case Shape::padding: {
      Dist p = sample_random(size(), rng);
      const std::size_t position = rng.uniform_int(0, p.size());
      return PaddingCase{std::move(p), position};
    }

    case Shape::refinement: {
      const Dist parent = sample_random(size(), rng);
      const std::size_t index = rng.uniform_int(0, parent.size() - 1);
      const Dist child = sample_random(size(), rng);
      return RefinementCase{split(parent, index, child)};
    }

    case Shape::product: {
      Dist p = sample_random(size(), rng);
      Dist q = sample_random(size(), rng);
      return ProductCase{std::move(p), std::move(q)};
    }

    case Shape::joint: {
      Dist p = sample_random(size(), rng);
      const std::size_t m = size();
      std::vector<Dist> rows;
      rows.reserve(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) rows.push_back(sample_random(m, rng));
      return JointCase{std::move(p), make_cond_dist(std::move(rows))};
    }

    case Shape::uniform_pair: {
      const std::size_t smaller = rng.uniform_int(1, cfg.max_n_uniform - 1);
      const std::size_t larger = rng.uniform_int(smaller + 1, cfg.max_n_uniform);
      return UniformPairCase{smaller, larger};
    }

    case Shape::direction: {
      Dist p = interior_sample(size(), rng);
      auto d = zero_sum_direction(p.size(), rng);
      return DirectionCase{std::move(p), std::move(d)};
    }
  }
  throw Error(ErrorCode::bad_config, "unhandled axiom");
}

namespace {

std::vector<double> to_vector(const Dist& d) {
  return {d.weights().begin(), d.weights().end()};
}

}  // namespace

std::vector<std::vector<double>> free_blocks(const Instance& instance) {
  return std::visit(
      [](const auto& c) -> std::vector<std::vector<double>> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, DistCase> ||
                      std::is_same_v<T, PermutationCase> ||
                      std::is_same_v<T, PaddingCase>) {
          return {to_vector(c.p)};
        } else if constexpr (std::is_same_v<T, RefinementCase>) {
          const double mass = c.r.parent[c.r.index];
          std::vector<double> child(c.r.parts.size(),
                                    1.0 / static_cast<double>(c.r.parts.size()));
          if (mass > kTolNorm) child = to_vector(conditional_child(c.r));
          return {to_vector(c.r.parent), std::move(child)};
        } else if constexpr (std::is_same_v<T, ProductCase>) {
          return {to_vector(c.p), to_vector(c.q)};
        } else if constexpr (std::is_same_v<T, JointCase>) {
          std::vector<std::vector<double>> out = {to_vector(c.p)};
          for (const Dist& row : c.c.rows()) out.push_back(to_vector(row));
          return out;
        } else {
          return {};
        }
      },
      instance);
}

Instance rebuild(const Instance& proto,
                 const std::vector<std::vector<double>>& blocks) {
  return std::visit(
      [&blocks](const auto& c) -> Instance {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, DistCase>) {
          return DistCase{make_dist(blocks[0])};
        } else if constexpr (std::is_same_v<T, PermutationCase>) {
          return PermutationCase{make_dist(blocks[0]), c.sigma};
        } else if constexpr (std::is_same_v<T, PaddingCase>) {
          return PaddingCase{make_dist(blocks[0]), c.position};
        } else if constexpr (std::is_same_v<T, RefinementCase>) {
          return RefinementCase{split(make_dist(blocks[0]), c.r.index, make_dist(blocks[1]))};
        } else if constexpr (std::is_same_v<T, ProductCase>) {
          return ProductCase{make_dist(blocks[0]), make_dist(blocks[1])};
        } else if constexpr (std::is_same_v<T, JointCase>) {
          std::vector<Dist> rows;
          for (std::size_t i = 1; i < blocks.size(); ++i) rows.push_back(make_dist(blocks[i]));
          return JointCase{make_dist(blocks[0]), make_cond_dist(std::move(rows))};
        } else {
          return c;
        }
      },
      proto);
}

}  // namespace entaxiom::detail
