#pragma once

#include <span>
#include <string_view>

#include "hbim/problem.hpp"

namespace hbim {

/// Integration range of the average error.
enum class ErrorDomain {
  Layer,     ///< [0, delta(t)]
  Extended,  ///< [0, X] with X = max(12 sqrt(alpha t), delta(t)), a truncated half-line
};

std::string_view to_string(ErrorDomain domain);

/// Distance at which the half-line is cut: erfc(6) < 1e-16.
inline constexpr double kTruncationEta = 12.0;

/// Temperature scale of the dimensionless field: T_s - T_inf (PT), or the exact surface
/// excess 2F sqrt(alpha t / pi) / lambda (PF) so that theta_exact(0) = 1 for both kinds.
double theta_scale(const ProblemSpec& spec, double t);

double theta_exact(const ProblemSpec& spec, double x, double t);
double theta_approx(const ProblemSpec& spec, double n, double x, double t);

/// Right end of the averaging interval, m.
double domain_extent(const ProblemSpec& spec, double n, double t, ErrorDomain domain);

/// (1/L) * integral of (theta_exact - theta_approx) over the domain.
double average_error(const ProblemSpec& spec, double n, double t, ErrorDomain domain);

/// max |theta_exact - theta_approx| over the grid; grid points must lie in
/// [0, 12 sqrt(alpha t)].
double max_abs_error(const ProblemSpec& spec, double n, double t, std::span<const double> grid);

/// Squared heat-equation residual of the profile integrated over the layer,
///   E = integral_0^delta (dT/dt - alpha d2T/dx2)^2 dx,  in K^2 m / s^2.
/// The integrand behaves like (1 - x/delta)^(2n-4) at the front: it is integrable only
/// for n > 1.5, and DivergenceError is thrown otherwise.
double langford_residual(const ProblemSpec& spec, double n, double t);

/// Heat-equation residual dT/dt - alpha d2T/dx2 at s = 1 - x/delta in (0, 1].
double profile_residual(const ProblemSpec& spec, double n, double s, double t);

struct ErrorReport {
  ProblemKind kind = ProblemKind::PrescribedTemperature;
  double n = 0.0;
  double t = 0.0;
  double avg_error = 0.0;
  double max_abs_error = 0.0;
  double langford = 0.0;
  ErrorDomain integration_domain = ErrorDomain::Layer;
  double domain_extent = 0.0;  ///< X, m
};

/// Collects all metrics. The max error is taken on a uniform grid of `grid_size` points
/// over the averaging domain, which always contains the layer. Propagates
/// DivergenceError from the Langford residual.
ErrorReport error_report(const ProblemSpec& spec, double n, double t, ErrorDomain domain,
                         int grid_size = 2048);

}  // namespace hbim
