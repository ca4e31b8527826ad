#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace hbim {

/// Surface condition at x = 0 of the semi-infinite medium.
enum class ProblemKind {
  PrescribedTemperature,  ///< Dirichlet: T(0, t) = T_s
  PrescribedFlux,         ///< Neumann: -lambda dT/dx(0, t) = F
};

std::string_view to_string(ProblemKind kind);
std::optional<ProblemKind> parse_problem_kind(std::string_view text);

/// Physical description of one 1-D conduction problem. All temperatures are absolute (K).
/// Only the field matching `kind` among `surface_temperature` / `surface_flux` is used.
struct ProblemSpec {
  ProblemKind kind = ProblemKind::PrescribedTemperature;
  double ambient_temperature = 300.0;   ///< T_inf, K
  double surface_temperature = 400.0;   ///< T_s, K (PT only)
  double surface_flux = 1.0e4;          ///< F, W/m^2 (PF only)
  double conductivity = 1.0;            ///< lambda, W/(m K)
  double diffusivity = 1.0e-5;          ///< alpha, m^2/s

  static ProblemSpec prescribed_temperature(double ambient, double surface, double conductivity,
                                            double diffusivity);
  static ProblemSpec prescribed_flux(double ambient, double flux, double conductivity,
                                     double diffusivity);

  /// Throws DomainError when an invariant is violated. Temperature positivity of PF fields
  /// is not checked here; it is enforced wherever a temperature is evaluated.
  void validate() const;

  /// T_s - T_inf for PT problems.
  double temperature_rise() const { return surface_temperature - ambient_temperature; }
};

}  // namespace hbim
