#pragma once

#include "hbim/problem.hpp"

namespace hbim {

/// Closed-form temperature field of the semi-infinite solid initially at T_inf.
///
///   PT:  T = T_inf + (T_s - T_inf) erfc(z)
///   PF:  T = T_inf + (2F/lambda) sqrt(alpha t) ierfc(z)
///
/// with z = x / (2 sqrt(alpha t)). Evaluators require x >= 0 and t > 0 and throw
/// DomainError otherwise; `temperature` also throws PositivityError if the result is
/// not a positive absolute temperature.
class ExactSolution {
public:
  explicit ExactSolution(ProblemSpec spec);

  const ProblemSpec& spec() const noexcept { return spec_; }

  double temperature(double x, double t) const;
  /// T - T_inf, without the positivity check.
  double excess(double x, double t) const;
  double gradient(double x, double t) const;
  double time_derivative(double x, double t) const;

  /// Analytic d2T/dx2, used to check the heat equation without differencing twice.
  double second_gradient(double x, double t) const;

  /// PF only: the same field written out as
  /// T_inf + (2F/lambda) [sqrt(alpha t / pi) exp(-z^2) - (x/2) erfc(z)].
  /// Kept as an independent route to `temperature`.
  double flux_temperature_expanded(double x, double t) const;

  /// T(0, t) - T_inf. Constant for PT, grows like sqrt(t) for PF.
  double surface_excess(double t) const;

private:
  void check_args(double x, double t) const;

  ProblemSpec spec_;
};

}  // namespace hbim
