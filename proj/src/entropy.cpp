#include "entaxiom/entropy.hpp"

#include <algorithm>
#include <array>
#include <vector>
#include <cmath>
#include <numbers>
#include <sstream>

#include "entaxiom/error.hpp"

namespace entaxiom {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::shannon: return "shannon";
    case Family::tsallis: return "tsallis";
    case Family::daroczy: return "daroczy";
    case Family::hybrid_eq10: return "hybrid_eq10";
    case Family::abe: return "abe";
    case Family::renyi: return "renyi";
    case Family::landsberg_vedral: return "landsberg_vedral";
    case Family::power_log_eq19: return "power_log_eq19";
    case Family::weighted_log_eq20: return "weighted_log_eq20";
  }
  return "unknown";
}

std::string_view to_string(Eq10Variant v) noexcept {
  return v == Eq10Variant::corrected ? "corrected" : "as_printed";
}

Family parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorCode::bad_param, "unknown family '" + std::string(name) + "'");
}

Eq10Variant parse_variant(std::string_view name) {
  if (name == "corrected") return Eq10Variant::corrected;
  if (name == "as_printed") return Eq10Variant::as_printed;
  throw Error(ErrorCode::bad_param, "unknown variant '" + std::string(name) + "'");
}

bool has_unit_pole(Family f) noexcept {
  switch (f) {
    case Family::tsallis:
    case Family::daroczy:
    case Family::hybrid_eq10:
    case Family::abe:
    case Family::renyi:
    case Family::landsberg_vedral:
      return true;
    default:
      return false;
  }
}

bool takes_param(Family f) noexcept { return f != Family::shannon; }

void EntropySpec::validate() const {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::bad_param, "scale must be a positive finite number");
  }
  if (!takes_param(family)) return;
  if (!std::isfinite(param)) {
    throw Error(ErrorCode::bad_param, "parameter must be finite");
  }
  // Tsallis is also defined for beta <= 0 over the support; everything else
  // needs a positive parameter.
  if (family != Family::tsallis && param <= 0.0) {
    std::ostringstream msg;
    msg << to_string(family) << " needs param > 0, got " << param;
    throw Error(ErrorCode::bad_param, msg.str());
  }
}

bool EntropySpec::at_pole() const noexcept {
  return has_unit_pole(family) && std::abs(param - 1.0) < kPoleRadius;
}

std::string EntropySpec::label() const {
  std::ostringstream out;
  out << to_string(family);
  if (takes_param(family)) out << "(" << param << ")";
  if (family == Family::hybrid_eq10 && eq10_variant == Eq10Variant::as_printed) {
    out << "[as_printed]";
  }
  if (scale != 1.0) out << "*" << scale;
  return out.str();
}

EntropySpec make_spec(Family family, std::optional<double> param, double scale,
                      Eq10Variant variant) {
  if (takes_param(family) && !param) {
    throw Error(ErrorCode::bad_param,
                std::string(to_string(family)) + " needs a parameter");
  }
  EntropySpec spec{family, param.value_or(1.0), scale, variant};
  spec.validate();
  return spec;
}

namespace {

constexpr double kLn2 = std::numbers::ln2;

double shannon(std::span<const double> w) {
  double h = 0.0;
  for (double p : w) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

// 1 - sum p^beta, written as -sum p * expm1((beta - 1) ln p) so that the
// cancellation near beta = 1 does not eat the result.
double one_minus_power_sum(std::span<const double> w, double beta) {
  double acc = 0.0;
  for (double p : w) {
    if (p > 0.0) acc -= p * std::expm1((beta - 1.0) * std::log(p));
  }
  return acc;
}

double tsallis(std::span<const double> w, double beta) {
  return one_minus_power_sum(w, beta) / (beta - 1.0);
}

double daroczy(std::span<const double> w, double beta) {
  // 1 - 2^(1 - beta)
  const double denom = -std::expm1((1.0 - beta) * kLn2);
  return one_minus_power_sum(w, beta) / denom;
}

double abe(std::span<const double> w, double beta) {
  // Exponent pair (beta, 1/beta): sum (p^beta - p^(1/beta)) / (1/beta - beta).
  const double inv = 1.0 / beta;
  double acc = 0.0;
  for (double p : w) {
    if (p > 0.0) {
      const double lp = std::log(p);
      acc += std::exp(inv * lp) * std::expm1((beta - inv) * lp);
    }
  }
  return acc / (inv - beta);
}

double renyi(std::span<const double> w, double beta) {
  // ln(sum p^beta) = log1p(-(1 - sum p^beta))
  return std::log1p(-one_minus_power_sum(w, beta)) / (1.0 - beta);
}

double landsberg_vedral(std::span<const double> w, double beta) {
  // 1/S - 1 = (1 - S)/S; S is summed directly since 1 - deficit loses
  // digits once S is small.
  double sum = 0.0;
  for (double p : w) {
    if (p > 0.0) sum += std::pow(p, beta);
  }
  return one_minus_power_sum(w, beta) / (sum * (beta - 1.0));
}

double power_log(std::span<const double> w, double gamma) {
  const double exponent = 1.0 / gamma;
  double h = 0.0;
  for (double p : w) {
    if (p > 0.0) h += p * std::pow(std::max(0.0, -std::log(p)), exponent);
  }
  return h;
}

double weighted_log(std::span<const double> w, double beta) {
  double h = 0.0;
  for (double p : w) {
    if (p > 0.0) h -= std::pow(p, beta) * std::log(p);
  }
  return h;
}

double pole_limit(const EntropySpec& spec, std::span<const double> w) {
  switch (spec.family) {
    case Family::daroczy: return shannon(w) / kLn2;
    case Family::hybrid_eq10:
      return spec.eq10_variant == Eq10Variant::corrected ? 2.0 * shannon(w) : 0.0;
    default: return shannon(w);
  }
}

double raw_entropy(const EntropySpec& spec, std::span<const double> w) {
  if (spec.at_pole()) return pole_limit(spec, w);
  const double b = spec.param;
  switch (spec.family) {
    case Family::shannon: return shannon(w);
    case Family::tsallis: return tsallis(w, b);
    case Family::daroczy: return daroczy(w, b);
    case Family::hybrid_eq10: {
      const double t = tsallis(w, b);
      const double s = shannon(w);
      return spec.eq10_variant == Eq10Variant::corrected ? t + s : t - s;
    }
    case Family::abe: return abe(w, b);
    case Family::renyi: return renyi(w, b);
    case Family::landsberg_vedral: return landsberg_vedral(w, b);
    case Family::power_log_eq19: return power_log(w, b);
    case Family::weighted_log_eq20: return weighted_log(w, b);
  }
  return 0.0;
}

}  // namespace

double entropy_of(const EntropySpec& spec, std::span<const double> weights) {
  // Summing in sorted order makes the value independent of how the weights
  // are arranged, bit for bit.
  constexpr std::size_t kInline = 128;
  if (weights.size() <= kInline) {
    std::array<double, kInline> buf;
    std::copy(weights.begin(), weights.end(), buf.begin());
    std::sort(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(weights.size()));
    return spec.scale * raw_entropy(spec, {buf.data(), weights.size()});
  }
  std::vector<double> sorted(weights.begin(), weights.end());
  std::sort(sorted.begin(), sorted.end());
  return spec.scale * raw_entropy(spec, sorted);
}

EntropyValue evaluate(const EntropySpec& spec, const Dist& p) {
  spec.validate();
  return {entropy_of(spec, p.weights()), spec, p.size()};
}

double conditional_entropy(const EntropySpec& spec, const Dist& p,
                           const CondDist& c) {
  spec.validate();
  if (c.row_count() != p.size()) {
    throw Error(ErrorCode::shape_mismatch,
                "conditional row count differs from the marginal size");
  }
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) h += p[i] * entropy_of(spec, c.row(i).weights());
  }
  return h;
}

double power_sum(std::span<const double> weights, double beta) {
  double s = 0.0;
  for (double p : weights) {
    if (p > 0.0) s += std::pow(p, beta);
  }
  return s;
}

double IdentityResiduals::max() const noexcept {
  return std::max({abe_decomposition, tsallis_pseudoadditivity, daroczy_tsallis,
                   renyi_additivity, eq20_product});
}

IdentityResiduals identity_residuals(double beta, const Dist& p, const Dist& q) {
  if (!(beta > 0.0) || beta == 1.0 || !std::isfinite(beta)) {
    throw Error(ErrorCode::bad_param, "identities need beta > 0, beta != 1");
  }
  const auto of = [beta](Family f, const Dist& d) {
    return entropy_of(EntropySpec{f, beta}, d.weights());
  };
  const Dist pq = product(p, q);
  IdentityResiduals r;

  const double tsallis_beta = of(Family::tsallis, p);
  const double tsallis_inv =
      entropy_of(EntropySpec{Family::tsallis, 1.0 / beta}, p.weights());
  r.abe_decomposition =
      std::abs(of(Family::abe, p) - (beta / (beta + 1.0) * tsallis_beta +
                                     1.0 / (beta + 1.0) * tsallis_inv));

  const double ta = tsallis_beta;
  const double tb = of(Family::tsallis, q);
  r.tsallis_pseudoadditivity =
      std::abs(of(Family::tsallis, pq) - (ta + tb + (1.0 - beta) * ta * tb));

  r.daroczy_tsallis = std::abs(of(Family::daroczy, p) -
                               (beta - 1.0) / (1.0 - std::pow(2.0, 1.0 - beta)) * ta);

  r.renyi_additivity = std::abs(of(Family::renyi, pq) - of(Family::renyi, p) -
                                of(Family::renyi, q));

  r.eq20_product = std::abs(
      of(Family::weighted_log_eq20, pq) -
      (power_sum(q.weights(), beta) * of(Family::weighted_log_eq20, p) +
       power_sum(p.weights(), beta) * of(Family::weighted_log_eq20, q)));
  return r;
}

}  // namespace entaxiom
