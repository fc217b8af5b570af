#include "entaxiom/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "entaxiom/error.hpp"

namespace entaxiom {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::negative_mass: return "NegativeMass";
    case ErrorCode::bad_normalization: return "BadNormalization";
    case ErrorCode::bad_size: return "BadSize";
    case ErrorCode::bad_index: return "BadIndex";
    case ErrorCode::split_mass_mismatch: return "SplitMassMismatch";
    case ErrorCode::zero_mass_split: return "ZeroMassSplit";
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::bad_permutation: return "BadPermutation";
    case ErrorCode::bad_param: return "BadParam";
    case ErrorCode::bad_config: return "BadConfig";
    case ErrorCode::degenerate_scale: return "DegenerateScale";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

namespace {

double kahan_sum(std::span<const double> xs) {
  double sum = 0.0;
  double carry = 0.0;
  for (double x : xs) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace

bool Dist::is_degenerate() const noexcept {
  return std::count_if(weights_.begin(), weights_.end(),
                       [](double w) { return w > 0.0; }) == 1;
}

double Dist::min_weight() const noexcept {
  return *std::min_element(weights_.begin(), weights_.end());
}

Dist make_dist(std::span<const double> raw) {
  if (raw.empty()) throw Error(ErrorCode::bad_size, "distribution is empty");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw[i])) {
      throw Error(ErrorCode::bad_normalization, "non-finite weight");
    }
    if (raw[i] < -kTolNorm) {
      std::ostringstream msg;
      msg << "weight " << i << " = " << raw[i] << " is negative";
      throw Error(ErrorCode::negative_mass, msg.str());
    }
  }
  const double total = kahan_sum(raw);
  if (std::abs(total - 1.0) > kTolNorm) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "weights sum to " << total;
    throw Error(ErrorCode::bad_normalization, msg.str());
  }

  std::vector<double> w(raw.begin(), raw.end());
  for (double& x : w) x = x < kZeroSnap ? 0.0 : std::min(x, 1.0);
  const double kept = kahan_sum(w);
  if (kept != 1.0) {
    for (double& x : w) x /= kept;
  }
  return Dist(std::move(w));
}

Dist uniform(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::bad_size, "uniform needs N >= 1");
  return make_dist(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Dist degenerate(std::size_t n, std::size_t k) {
  if (n == 0) throw Error(ErrorCode::bad_size, "degenerate needs N >= 1");
  if (k >= n) {
    throw Error(ErrorCode::bad_index, "point-mass position outside 0..N-1");
  }
  std::vector<double> w(n, 0.0);
  w[k] = 1.0;
  return make_dist(w);
}

CondDist make_cond_dist(std::vector<Dist> rows) {
  if (rows.empty()) throw Error(ErrorCode::bad_size, "no conditional rows");
  const std::size_t m = rows.front().size();
  for (const Dist& r : rows) {
    if (r.size() != m) {
      throw Error(ErrorCode::shape_mismatch, "conditional rows differ in length");
    }
  }
  return CondDist(std::move(rows));
}

CondDist make_cond_dist(const std::vector<std::vector<double>>& rows) {
  std::vector<Dist> built;
  built.reserve(rows.size());
  for (const auto& r : rows) built.push_back(make_dist(r));
  return make_cond_dist(std::move(built));
}

namespace {

void validate_refinement(const Refinement& r) {
  if (r.index >= r.parent.size()) {
    throw Error(ErrorCode::bad_index, "split index outside the parent");
  }
  if (r.parts.empty()) throw Error(ErrorCode::bad_size, "split has no parts");
  for (double q : r.parts) {
    if (q < -kTolNorm) throw Error(ErrorCode::negative_mass, "negative split part");
  }
  const double mass = kahan_sum(r.parts);
  if (std::abs(mass - r.parent[r.index]) > kTolNorm) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "parts sum to " << mass << " but p_n = " << r.parent[r.index];
    throw Error(ErrorCode::split_mass_mismatch, msg.str());
  }
}

}  // namespace

Dist refine(const Refinement& r) {
  validate_refinement(r);
  const auto parent = r.parent.weights();
  std::vector<double> w;
  w.reserve(parent.size() + r.parts.size() - 1);
  w.insert(w.end(), parent.begin(), parent.begin() + r.index);
  for (double q : r.parts) w.push_back(std::max(q, 0.0));
  w.insert(w.end(), parent.begin() + r.index + 1, parent.end());
  return make_dist(w);
}

Dist conditional_child(const Refinement& r) {
  validate_refinement(r);
  const double mass = r.parent[r.index];
  if (mass <= kTolNorm) {
    throw Error(ErrorCode::zero_mass_split, "split position carries no mass");
  }
  std::vector<double> w(r.parts.size());
  const double total = kahan_sum(r.parts);
  std::transform(r.parts.begin(), r.parts.end(), w.begin(),
                 [total](double q) { return std::max(q, 0.0) / total; });
  return make_dist(w);
}

Dist product(const Dist& p, const Dist& q) {
  std::vector<double> w;
  w.reserve(p.size() * q.size());
  for (double a : p.weights()) {
    for (double b : q.weights()) w.push_back(a * b);
  }
  return make_dist(w);
}

Dist joint(const Dist& p, const CondDist& c) {
  if (c.row_count() != p.size()) {
    std::ostringstream msg;
    msg << "conditional has " << c.row_count() << " rows, marginal has "
        << p.size() << " entries";
    throw Error(ErrorCode::shape_mismatch, msg.str());
  }
  std::vector<double> w;
  w.reserve(p.size() * c.col_count());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (double b : c.row(i).weights()) w.push_back(p[i] * b);
  }
  return make_dist(w);
}

Dist pad_zero(const Dist& p, std::size_t position) {
  if (position > p.size()) {
    throw Error(ErrorCode::bad_index, "padding position outside 0..N");
  }
  std::vector<double> w(p.weights().begin(), p.weights().end());
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(position), 0.0);
  return Dist(std::move(w));
}

Dist permute(const Dist& p, std::span<const std::size_t> sigma) {
  if (sigma.size() != p.size()) {
    throw Error(ErrorCode::bad_permutation, "permutation length differs from N");
  }
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s : sigma) {
    if (s >= p.size() || seen[s]) {
      throw Error(ErrorCode::bad_permutation, "not a bijection on 0..N-1");
    }
    seen[s] = true;
  }
  std::vector<double> w(p.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) w[i] = p[sigma[i]];
  return Dist(std::move(w));
}

Dist sample_random(std::size_t n, Rng& rng) {
  if (n == 0) throw Error(ErrorCode::bad_size, "sample needs N >= 1");
  std::vector<double> w(n);
  for (double& x : w) x = rng.exponential();
  const double total = kahan_sum(w);
  for (double& x : w) x /= total;
  return make_dist(w);
}

Dist sample_random(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_random(n, rng);
}

}  // namespace entaxiom
