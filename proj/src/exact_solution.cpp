#include "hbim/exact_solution.hpp"

#include <cmath>
#include <numbers>

#include "hbim/errors.hpp"
#include "hbim/special_functions.hpp"

namespace hbim {
ExactSolution::ExactSolution(ProblemSpec spec) : spec_(spec) { spec_.validate(); }

void ExactSolution::check_args(double x, double t) const {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("exact solution: t must be > 0");
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("exact solution: x must be >= 0");
}

double ExactSolution::excess(double x, double t) const {
  check_args(x, t);
  const double root_at = std::sqrt(spec_.diffusivity * t);
  const double z = x / (2.0 * root_at);
  if (spec_.kind == ProblemKind::PrescribedTemperature) {
    return spec_.temperature_rise() * special::erfc(z);
  }
  return 2.0 * spec_.surface_flux / spec_.conductivity * root_at * special::ierfc(z);
}

double ExactSolution::temperature(double x, double t) const {
  const double value = spec_.ambient_temperature + excess(x, t);
  if (!(value > 0.0)) throw PositivityError(x, t, value);
  return value;
}

double ExactSolution::flux_temperature_expanded(double x, double t) const {
  check_args(x, t);
  if (spec_.kind != ProblemKind::PrescribedFlux) {
    throw DomainError("expanded flux form requires a prescribed-flux problem");
  }
  const double root_at = std::sqrt(spec_.diffusivity * t);
  const double z = x / (2.0 * root_at);
  const double scale = 2.0 * spec_.surface_flux / spec_.conductivity;
  return spec_.ambient_temperature +
         scale * (root_at * std::numbers::inv_sqrtpi * std::exp(-z * z) - 0.5 * x * special::erfc(z));
}

double ExactSolution::gradient(double x, double t) const {
  check_args(x, t);
  const double at = spec_.diffusivity * t;
  if (spec_.kind == ProblemKind::PrescribedTemperature) {
    return -spec_.temperature_rise() * std::exp(-x * x / (4.0 * at)) / std::sqrt(std::numbers::pi * at);
  }
  return -spec_.surface_flux / spec_.conductivity * special::erfc(x / (2.0 * std::sqrt(at)));
}

double ExactSolution::second_gradient(double x, double t) const {
  check_args(x, t);
  const double at = spec_.diffusivity * t;
  const double gauss = std::exp(-x * x / (4.0 * at));
  if (spec_.kind == ProblemKind::PrescribedTemperature) {
    return spec_.temperature_rise() * x * gauss / (2.0 * at * std::sqrt(std::numbers::pi * at));
  }
  return spec_.surface_flux / spec_.conductivity * gauss / std::sqrt(std::numbers::pi * at);
}

double ExactSolution::time_derivative(double x, double t) const {
  check_args(x, t);
  const double at = spec_.diffusivity * t;
  const double gauss = std::exp(-x * x / (4.0 * at));
  if (spec_.kind == ProblemKind::PrescribedTemperature) {
    return spec_.temperature_rise() * x * gauss / (2.0 * t * std::sqrt(std::numbers::pi * at));
  }
  // ierfc(z) + z erfc(z) = exp(-z^2)/sqrt(pi)
  return spec_.surface_flux / spec_.conductivity * std::sqrt(spec_.diffusivity / (std::numbers::pi * t)) *
         gauss;
}

double ExactSolution::surface_excess(double t) const {
  if (!(t > 0.0)) throw DomainError("exact solution: t must be > 0");
  if (spec_.kind == ProblemKind::PrescribedTemperature) return spec_.temperature_rise();
  return 2.0 * spec_.surface_flux / spec_.conductivity * std::sqrt(spec_.diffusivity * t / std::numbers::pi);
}

}  // namespace hbim
