#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "entaxiom/simplex.hpp"

namespace entaxiom {

enum class Family {
  shannon,
  tsallis,
  daroczy,
  hybrid_eq10,
  abe,
  renyi,
  landsberg_vedral,
  power_log_eq19,
  weighted_log_eq20,
};

inline constexpr std::array kAllFamilies = {
    Family::shannon,          Family::tsallis,        Family::daroczy,
    Family::hybrid_eq10,      Family::abe,            Family::renyi,
    Family::landsberg_vedral, Family::power_log_eq19, Family::weighted_log_eq20,
};

/// Sign of the (beta - 1) p ln p term inside the hybrid family.
/// `corrected` evaluates to Tsallis + Shannon, `as_printed` to
/// Tsallis - Shannon.
enum class Eq10Variant { corrected, as_printed };

std::string_view to_string(Family f) noexcept;
std::string_view to_string(Eq10Variant v) noexcept;
/// Throws BadParam on an unknown identifier.
Family parse_family(std::string_view name);
Eq10Variant parse_variant(std::string_view name);

/// Families with a pole at parameter 1, evaluated there by their limit.
bool has_unit_pole(Family f) noexcept;
bool takes_param(Family f) noexcept;

/// Distance from 1 below which singular families return their limit.
inline constexpr double kPoleRadius = 1e-8;

struct EntropySpec {
  Family family = Family::shannon;
  /// beta, or gamma for power_log_eq19. Ignored for shannon.
  double param = 1.0;
  /// The constant k; every family is multiplied by it.
  double scale = 1.0;
  Eq10Variant eq10_variant = Eq10Variant::corrected;

  /// Throws BadParam if the parameter lies outside the family's domain.
  void validate() const;
  bool at_pole() const noexcept;
  std::string label() const;

  friend bool operator==(const EntropySpec&, const EntropySpec&) = default;
};

EntropySpec make_spec(Family family, std::optional<double> param = {},
                      double scale = 1.0,
                      Eq10Variant variant = Eq10Variant::corrected);

struct EntropyValue {
  double value = 0.0;
  EntropySpec spec;
  std::size_t dist_size = 0;
};

/// scale * H(p) in nats. Zero weights contribute nothing.
EntropyValue evaluate(const EntropySpec& spec, const Dist& p);

/// Same as evaluate().value without validation; the hot path of the engine.
double entropy_of(const EntropySpec& spec, std::span<const double> weights);

/// H(Y/X) = sum_i p_i H(row_i). Throws ShapeMismatch.
double conditional_entropy(const EntropySpec& spec, const Dist& p,
                           const CondDist& c);

/// Sum of p_i^beta over strictly positive weights.
double power_sum(std::span<const double> weights, double beta);

/// Absolute residuals of the closed-form identities between families, at
/// parameter beta, for a distribution p and an independent partner q.
struct IdentityResiduals {
  double abe_decomposition = 0.0;
  double tsallis_pseudoadditivity = 0.0;
  double daroczy_tsallis = 0.0;
  double renyi_additivity = 0.0;
  double eq20_product = 0.0;

  double max() const noexcept;
};

/// Throws BadParam unless beta > 0 and beta != 1.
IdentityResiduals identity_residuals(double beta, const Dist& p, const Dist& q);

}  // namespace entaxiom
