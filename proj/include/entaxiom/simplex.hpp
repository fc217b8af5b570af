#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "entaxiom/random.hpp"

namespace entaxiom {

/// Absolute tolerance for normalization and split-mass checks.
inline constexpr double kTolNorm = 1e-12;

/// Weights below this are snapped to exact zero after construction.
inline constexpr double kZeroSnap = 1e-12;

/// A finite probability vector on the simplex. Immutable once built; the only
/// way to obtain one is through make_dist or the constructors below, so every
/// instance satisfies the invariants (non-negative, sums to one, N >= 1).
class Dist {
 public:
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

  /// True when one weight carries all the mass.
  bool is_degenerate() const noexcept;
  double min_weight() const noexcept;

  friend bool operator==(const Dist&, const Dist&) = default;

 private:
  explicit Dist(std::vector<double> weights) : weights_(std::move(weights)) {}
  friend Dist make_dist(std::span<const double> raw);
  friend Dist pad_zero(const Dist& p, std::size_t position);
  friend Dist permute(const Dist& p, std::span<const std::size_t> sigma);

  std::vector<double> weights_;
};

/// Validates, clamps to [0,1], snaps tiny weights to zero and renormalizes.
/// Throws NegativeMass, BadNormalization or BadSize.
Dist make_dist(std::span<const double> raw);
inline Dist make_dist(std::initializer_list<double> raw) {
  return make_dist(std::span<const double>(raw.begin(), raw.size()));
}

Dist uniform(std::size_t n);

/// Point mass at 0-based position k.
Dist degenerate(std::size_t n, std::size_t k);

/// Row-stochastic matrix: row i is the law of Y given X = x_i.
class CondDist {
 public:
  std::span<const Dist> rows() const noexcept { return rows_; }
  const Dist& row(std::size_t i) const { return rows_[i]; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t col_count() const noexcept { return rows_.front().size(); }

 private:
  explicit CondDist(std::vector<Dist> rows) : rows_(std::move(rows)) {}
  friend CondDist make_cond_dist(std::vector<Dist> rows);

  std::vector<Dist> rows_;
};

/// Throws ShapeMismatch for ragged rows, BadSize for an empty matrix.
CondDist make_cond_dist(std::vector<Dist> rows);
CondDist make_cond_dist(const std::vector<std::vector<double>>& rows);

/// Splitting the mass at `index` (0-based) of `parent` into `parts`.
struct Refinement {
  Dist parent;
  std::size_t index = 0;
  std::vector<double> parts;
};

/// Parent with position `index` replaced in place by the parts.
/// Throws BadIndex, BadSize (no parts), NegativeMass, SplitMassMismatch.
Dist refine(const Refinement& r);

/// The normalized split (q_1/p_n, ..., q_m/p_n). Throws ZeroMassSplit when
/// p_n <= kTolNorm; callers treat the bound term p_n * H(child) as 0 then.
Dist conditional_child(const Refinement& r);

/// Independent joint, row-major: entry i*M + j is p_i * q_j.
Dist product(const Dist& p, const Dist& q);

/// Joint with conditional rows, row-major: entry i*M + j is p_i * c_ij.
Dist joint(const Dist& p, const CondDist& c);

/// Inserts a zero at 0-based `position` (0..N). Throws BadIndex.
Dist pad_zero(const Dist& p, std::size_t position);

/// result[i] = p[sigma[i]] for a 0-based permutation sigma.
/// Throws BadPermutation.
Dist permute(const Dist& p, std::span<const std::size_t> sigma);

/// Uniform draw from the (N-1)-simplex: N standard exponentials divided by
/// their sum.
Dist sample_random(std::size_t n, Rng& rng);
Dist sample_random(std::size_t n, std::uint64_t seed);

}  // namespace entaxiom
