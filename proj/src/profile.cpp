#include "hbim/profile.hpp"

#include <cmath>
#include <string>

#include "hbim/errors.hpp"

namespace hbim {

void require_valid_exponent(double n) {
  if (!(n > 1.0 && n <= kMaxExponent)) {
    throw DomainError("profile exponent must lie in (1, 20], got " + std::to_string(n));
  }
}

double hbi_delta_coefficient(ProblemKind kind, double n) {
  require_valid_exponent(n);
  const double base = n * (n + 1.0);
  return kind == ProblemKind::PrescribedTemperature ? std::sqrt(2.0 * base) : std::sqrt(base);
}

double ProfileCoefficients::evaluate(double x) const {
  return a + b * std::pow(1.0 + c_inv * x, exponent);
}

HbimProfile::HbimProfile(ProblemSpec spec, double exponent)
    : spec_(spec), n_(exponent), coeff_(hbi_delta_coefficient(spec.kind, exponent)) {
  spec_.validate();
}

void HbimProfile::check_args(double x, double t) const {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("profile: t must be > 0");
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("profile: x must be >= 0");
}

double HbimProfile::penetration_depth(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("profile: t must be >= 0");
  return coeff_ * std::sqrt(spec_.diffusivity * t);
}

double HbimProfile::surface_amplitude(double t) const {
  if (spec_.kind == ProblemKind::PrescribedTemperature) return spec_.temperature_rise();
  return spec_.surface_flux * penetration_depth(t) / (spec_.conductivity * n_);
}

double HbimProfile::excess(double x, double t) const {
  check_args(x, t);
  const double delta = penetration_depth(t);
  if (x >= delta) return 0.0;
  return surface_amplitude(t) * std::pow(1.0 - x / delta, n_);
}

double HbimProfile::temperature(double x, double t) const {
  const double value = spec_.ambient_temperature + excess(x, t);
  if (!(value > 0.0)) throw PositivityError(x, t, value);
  return value;
}

double HbimProfile::gradient(double x, double t) const {
  check_args(x, t);
  const double delta = penetration_depth(t);
  if (x >= delta) return 0.0;
  return -surface_amplitude(t) * n_ / delta * std::pow(1.0 - x / delta, n_ - 1.0);
}

double HbimProfile::second_gradient(double x, double t) const {
  check_args(x, t);
  const double delta = penetration_depth(t);
  if (x > delta) return 0.0;
  return surface_amplitude(t) * n_ * (n_ - 1.0) / (delta * delta) *
         std::pow(1.0 - x / delta, n_ - 2.0);
}

double HbimProfile::time_derivative(double x, double t) const {
  check_args(x, t);
  const double delta = penetration_depth(t);
  if (x >= delta) return 0.0;
  const double s = 1.0 - x / delta;
  const double amp = surface_amplitude(t);
  // d delta/dt = delta / (2t); the front motion enters through x/delta.
  const double front_term = amp * n_ * std::pow(s, n_ - 1.0) * x / (2.0 * t * delta);
  if (spec_.kind == ProblemKind::PrescribedTemperature) return front_term;
  // The PF amplitude grows like delta as well.
  return front_term + amp / (2.0 * t) * std::pow(s, n_);
}

double HbimProfile::heat_content(double t) const {
  return surface_amplitude(t) * penetration_depth(t) / (n_ + 1.0);
}

double HbimProfile::heat_content_rate(double t) const {
  if (!(t > 0.0)) throw DomainError("profile: t must be > 0");
  const double rate = heat_content(t) / (2.0 * t);
  return spec_.kind == ProblemKind::PrescribedTemperature ? rate : 2.0 * rate;
}

ProfileCoefficients HbimProfile::coefficients(double t) const {
  const double delta = penetration_depth(t);
  if (!(delta > 0.0)) throw DomainError("profile coefficients need t > 0");
  return {spec_.ambient_temperature, surface_amplitude(t), -1.0 / delta, n_};
}

}  // namespace hbim
