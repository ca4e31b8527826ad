#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "hbim/problem.hpp"

namespace hbim {

/// Which temperature field an entropy quantity is computed from.
struct TegSource {
  enum class Kind { Approximate, Exact };

  Kind kind = Kind::Exact;
  double exponent = 0.0;  ///< profile exponent, Approximate only

  static TegSource approximate(double n) { return {Kind::Approximate, n}; }
  static TegSource exact() { return {Kind::Exact, 0.0}; }
};

std::string_view to_string(TegSource::Kind kind);

/// Local thermal entropy generation sampled on a grid at one instant.
struct EntropyField {
  std::vector<double> grid;   ///< x, m
  std::vector<double> sigma;  ///< W/(m^3 K)
  double t = 0.0;
  TegSource::Kind source = TegSource::Kind::Exact;
};

/// sigma = lambda (dT/dx)^2 / T^2 for pure conduction. Throws PositivityError if T <= 0.
double local_teg(double temperature, double gradient, double conductivity);

/// Lost work rate T_inf * sigma.
inline double lost_work(double ambient_temperature, double sigma) {
  return ambient_temperature * sigma;
}

/// Composes local_teg over the chosen field. The grid must be non-negative and strictly
/// increasing. The approximate field is identically zero beyond the front.
EntropyField teg_profile(const ProblemSpec& spec, TegSource source, double t,
                         std::span<const double> grid);

/// sigma(0, t) of the chosen field.
double surface_teg(const ProblemSpec& spec, TegSource source, double t);

/// sigma_approx(0, t) - sigma_exact(0, t) for exponent n.
///
/// PT: both surface temperatures are T_s, so the difference reduces to
///     lambda (dT/T_s)^2 / (alpha t) * [(n/c)^2 - 1/pi].
/// PF: both surface gradients are -F/lambda, so the difference reduces to
///     (F^2/lambda) (T_e^2 - T_a^2) / (T_a^2 T_e^2), with T_e - T_a formed from the
///     excess temperatures directly.
double delta_sigma_surface(const ProblemSpec& spec, double n, double t);

/// delta_sigma_surface divided by sigma_exact(0, t); dimensionless and independent of t.
double normalized_delta_sigma_surface(const ProblemSpec& spec, double n, double t);

/// lambda (dT/dx at 0)^2 / T_ref^2: control-volume generation with a frozen reference
/// temperature. Throws DomainError for T_ref <= 0.
double volumetric_entropy_rate(const ProblemSpec& spec, TegSource source, double t,
                               double reference_temperature);

/// Layer average of the dimensionless generation sigma delta^2 T_inf / (lambda dT^2),
/// where delta is the layer depth (of the approximate profile, or of the calibrated
/// profile for the exact field) and dT is |T_s - T_inf| (PT) or the calibrated PF
/// surface excess |F| delta / (lambda n*).
double average_dimensionless_teg(const ProblemSpec& spec, TegSource source, double t);

}  // namespace hbim
