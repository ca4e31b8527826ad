#include "hbim/error_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hbim/errors.hpp"
#include "hbim/exact_solution.hpp"
#include "hbim/numerics/quadrature.hpp"
#include "hbim/profile.hpp"

namespace hbim {
namespace {

void require_positive_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("error metrics: t must be > 0");
}

}  // namespace

std::string_view to_string(ErrorDomain domain) {
  return domain == ErrorDomain::Layer ? "layer" : "extended";
}

double theta_scale(const ProblemSpec& spec, double t) {
  return ExactSolution(spec).surface_excess(t);
}

double theta_exact(const ProblemSpec& spec, double x, double t) {
  const ExactSolution exact(spec);
  return exact.excess(x, t) / exact.surface_excess(t);
}

double theta_approx(const ProblemSpec& spec, double n, double x, double t) {
  return HbimProfile(spec, n).excess(x, t) / theta_scale(spec, t);
}

double domain_extent(const ProblemSpec& spec, double n, double t, ErrorDomain domain) {
  require_positive_time(t);
  const double delta = HbimProfile(spec, n).penetration_depth(t);
  if (domain == ErrorDomain::Layer) return delta;
  return std::max(kTruncationEta * std::sqrt(spec.diffusivity * t), delta);
}

double average_error(const ProblemSpec& spec, double n, double t, ErrorDomain domain) {
  require_positive_time(t);
  const ExactSolution exact(spec);
  const HbimProfile approx(spec, n);
  const double root_at = std::sqrt(spec.diffusivity * t);
  const double scale = exact.surface_excess(t);

  // Integrate in eta = x / sqrt(alpha t); the profile has a kink at eta = c.
  auto diff = [&](double eta) {
    const double x = eta * root_at;
    return (exact.excess(x, t) - approx.excess(x, t)) / scale;
  };
  const double front = approx.delta_coefficient();
  const double end = domain_extent(spec, n, t, domain) / root_at;
  double integral = numerics::adaptive_simpson(diff, 0.0, front);
  if (end > front) integral += numerics::adaptive_simpson(diff, front, end);
  return integral / end;
}

double max_abs_error(const ProblemSpec& spec, double n, double t, std::span<const double> grid) {
  require_positive_time(t);
  const ExactSolution exact(spec);
  const HbimProfile approx(spec, n);
  const double limit = kTruncationEta * std::sqrt(spec.diffusivity * t);
  const double scale = exact.surface_excess(t);
  double worst = 0.0;
  for (double x : grid) {
    if (!(x >= 0.0) || x > limit * (1.0 + 1e-12)) {
      throw DomainError("max_abs_error: grid point outside [0, 12 sqrt(alpha t)]");
    }
    worst = std::max(worst, std::fabs(exact.excess(x, t) - approx.excess(x, t)) / scale);
  }
  return worst;
}

double profile_residual(const ProblemSpec& spec, double n, double s, double t) {
  require_positive_time(t);
  const HbimProfile approx(spec, n);
  const double c = approx.delta_coefficient();
  const double amp = approx.surface_amplitude(t);
  const double diffusion = n * (n - 1.0) / (c * c);  // alpha d2T/dx2 / (A/t s^(n-2))
  double transport = 0.0;                          // dT/dt / (A/t s^(n-2))
  if (spec.kind == ProblemKind::PrescribedTemperature) {
    transport = 0.5 * n * s * (1.0 - s);
  } else {
    transport = 0.5 * (s * s + n * s * (1.0 - s));
  }
  return amp / t * std::pow(s, n - 2.0) * (transport - diffusion);
}

double langford_residual(const ProblemSpec& spec, double n, double t) {
  require_positive_time(t);
  require_valid_exponent(n);
  if (n <= 1.5) {
    throw DivergenceError("Langford residual diverges at the front for n <= 1.5");
  }
  const HbimProfile approx(spec, n);
  const double c = approx.delta_coefficient();
  const double delta = approx.penetration_depth(t);
  const double amp_rate = approx.surface_amplitude(t) / t;
  const double diffusion = n * (n - 1.0) / (c * c);
  const bool pt = spec.kind == ProblemKind::PrescribedTemperature;

  // Residual = (A/t) s^(n-2) q(s), s = 1 - x/delta.
  auto q = [&](double s) {
    const double transport = pt ? 0.5 * n * s * (1.0 - s) : 0.5 * (s * s + n * s * (1.0 - s));
    return transport - diffusion;
  };

  // s^(2n-4) ds has an unbounded derivative at the front for n < 3.5. With s = w^k the
  // integrand becomes k w^(k(2n-3)-1) q(w^k)^2, which is at least C^3 once k(2n-3) >= 4.
  const double k = std::max(1.0, std::ceil(4.0 / (2.0 * n - 3.0)));
  const double power = k * (2.0 * n - 3.0) - 1.0;
  auto integrand = [&](double w) {
    const double qs = q(std::pow(w, k));
    return k * std::pow(w, power) * qs * qs;
  };
  numerics::QuadratureOptions opts;
  opts.abs_tol = 0.0;  // the integrand is positive and can be tiny for large n
  const double integral = numerics::adaptive_simpson(integrand, 0.0, 1.0, opts);
  return delta * amp_rate * amp_rate * integral;
}

ErrorReport error_report(const ProblemSpec& spec, double n, double t, ErrorDomain domain,
                         int grid_size) {
  if (grid_size < 2) throw DomainError("error_report: grid needs at least 2 points");
  ErrorReport report;
  report.kind = spec.kind;
  report.n = n;
  report.t = t;
  report.integration_domain = domain;
  report.domain_extent = domain_extent(spec, n, t, domain);
  report.avg_error = average_error(spec, n, t, domain);

  const double limit = std::min(report.domain_extent,
                                kTruncationEta * std::sqrt(spec.diffusivity * t));
  std::vector<double> grid(static_cast<std::size_t>(grid_size));
  for (int i = 0; i < grid_size; ++i) grid[i] = limit * i / (grid_size - 1);
  grid.back() = limit;
  report.max_abs_error = max_abs_error(spec, n, t, grid);

  report.langford = langford_residual(spec, n, t);
  return report;
}

}  // namespace hbim
