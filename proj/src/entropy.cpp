#include "hbim/entropy.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hbim/calibration.hpp"
#include "hbim/errors.hpp"
#include "hbim/exact_solution.hpp"
#include "hbim/numerics/quadrature.hpp"
#include "hbim/profile.hpp"

namespace hbim {
namespace {

void require_positive_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("entropy: t must be > 0");
}

// Evaluates sigma at (x, t) for either field through a uniform interface.
class TegEvaluator {
public:
  TegEvaluator(const ProblemSpec& spec, TegSource source)
      : source_(source),
        exact_(spec),
        approx_(spec, source.kind == TegSource::Kind::Approximate ? source.exponent
                                                                  : egm_exponent(spec.kind)) {}

  double operator()(double x, double t) const {
    if (source_.kind == TegSource::Kind::Approximate) {
      const double grad = approx_.gradient(x, t);
      return local_teg(approx_.temperature(x, t), grad, approx_.spec().conductivity);
    }
    const double grad = exact_.gradient(x, t);
    return local_teg(exact_.temperature(x, t), grad, exact_.spec().conductivity);
  }

  const HbimProfile& profile() const { return approx_; }

private:
  TegSource source_;
  ExactSolution exact_;
  HbimProfile approx_;
};

}  // namespace

std::string_view to_string(TegSource::Kind kind) {
  return kind == TegSource::Kind::Approximate ? "approximate" : "exact";
}

double local_teg(double temperature, double gradient, double conductivity) {
  if (!(temperature > 0.0)) throw PositivityError(temperature);
  if (!(conductivity > 0.0)) throw DomainError("local_teg: conductivity must be positive");
  const double ratio = gradient / temperature;
  return conductivity * ratio * ratio;
}

EntropyField teg_profile(const ProblemSpec& spec, TegSource source, double t,
                         std::span<const double> grid) {
  require_positive_time(t);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0)) throw DomainError("teg_profile: grid points must be >= 0");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw DomainError("teg_profile: grid must be strictly increasing");
    }
  }
  const TegEvaluator sigma(spec, source);
  EntropyField field;
  field.t = t;
  field.source = source.kind;
  field.grid.assign(grid.begin(), grid.end());
  field.sigma.reserve(grid.size());
  for (double x : grid) field.sigma.push_back(sigma(x, t));
  return field;
}

double surface_teg(const ProblemSpec& spec, TegSource source, double t) {
  require_positive_time(t);
  return TegEvaluator(spec, source)(0.0, t);
}

double delta_sigma_surface(const ProblemSpec& spec, double n, double t) {
  require_positive_time(t);
  spec.validate();
  const double c = hbi_delta_coefficient(spec.kind, n);
  const double at = spec.diffusivity * t;
  const double lambda = spec.conductivity;

  if (spec.kind == ProblemKind::PrescribedTemperature) {
    const double ratio = spec.temperature_rise() / spec.surface_temperature;
    const double slope = n / c;
    return lambda * ratio * ratio / at * (slope * slope - std::numbers::inv_pi);
  }

  const double q = spec.surface_flux / lambda;  // -dT/dx at the surface, both fields
  const double root_at = std::sqrt(at);
  const double approx_excess = q * root_at * c / n;
  const double exact_excess = 2.0 * q * root_at * std::numbers::inv_sqrtpi;
  const double ta = spec.ambient_temperature + approx_excess;
  const double te = spec.ambient_temperature + exact_excess;
  if (!(ta > 0.0)) throw PositivityError(0.0, t, ta);
  if (!(te > 0.0)) throw PositivityError(0.0, t, te);
  const double gap = q * root_at * (2.0 * std::numbers::inv_sqrtpi - c / n);  // te - ta
  return lambda * q * q * gap * (te + ta) / (ta * ta * te * te);
}

double normalized_delta_sigma_surface(const ProblemSpec& spec, double n, double t) {
  return delta_sigma_surface(spec, n, t) / surface_teg(spec, TegSource::exact(), t);
}

double volumetric_entropy_rate(const ProblemSpec& spec, TegSource source, double t,
                               double reference_temperature) {
  require_positive_time(t);
  if (!(reference_temperature > 0.0) || !std::isfinite(reference_temperature)) {
    throw DomainError("reference temperature must be a positive absolute temperature");
  }
  double grad = 0.0;
  if (source.kind == TegSource::Kind::Approximate) {
    grad = HbimProfile(spec, source.exponent).gradient(0.0, t);
  } else {
    grad = ExactSolution(spec).gradient(0.0, t);
  }
  const double ratio = grad / reference_temperature;
  return spec.conductivity * ratio * ratio;
}

double average_dimensionless_teg(const ProblemSpec& spec, TegSource source, double t) {
  require_positive_time(t);
  const TegEvaluator sigma(spec, source);
  const double delta = sigma.profile().penetration_depth(t);

  double scale = 0.0;
  if (spec.kind == ProblemKind::PrescribedTemperature) {
    scale = std::fabs(spec.temperature_rise());
  } else {
    const double n_star = egm_exponent(spec.kind);
    const double delta_star = hbi_delta_coefficient(spec.kind, n_star) *
                              std::sqrt(spec.diffusivity * t);
    scale = std::fabs(spec.surface_flux) * delta_star / (spec.conductivity * n_star);
  }
  const double norm = delta * delta * spec.ambient_temperature / (spec.conductivity * scale * scale);

  // Average over [0, delta] written in u = x / delta.
  auto integrand = [&](double u) { return sigma(u * delta, t) * norm; };
  return numerics::adaptive_simpson(integrand, 0.0, 1.0);
}

}  // namespace hbim
