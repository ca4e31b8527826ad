#pragma once

#include "hbim/problem.hpp"

namespace hbim {

/// Exponents accepted by every profile operation: (1, kMaxExponent].
inline constexpr double kMaxExponent = 20.0;

/// Throws DomainError unless n lies in (1, kMaxExponent].
void require_valid_exponent(double n);

/// Dimensionless depth coefficient c with delta(t) = c sqrt(alpha t), obtained by
/// integrating the heat equation over the layer for the power-law profile:
///   PT: c = sqrt(2 n (n + 1)),   PF: c = sqrt(n (n + 1)).
double hbi_delta_coefficient(ProblemKind kind, double n);

/// The raw form T(x) = a + b (1 + c x)^n of the profile at a fixed time.
struct ProfileCoefficients {
  double a = 0.0;      ///< K
  double b = 0.0;      ///< K
  double c_inv = 0.0;  ///< 1/m, equals -1/delta
  double exponent = 0.0;

  /// Valid inside the layer, 0 <= x <= delta.
  double evaluate(double x) const;
};

/// Heat-balance integral approximation T = T_inf + A(t) (1 - x/delta(t))^n on
/// [0, delta], T_inf beyond. The amplitude is A = T_s - T_inf (PT) or
/// F delta / (lambda n) (PF). Immutable.
class HbimProfile {
public:
  HbimProfile(ProblemSpec spec, double exponent);

  const ProblemSpec& spec() const noexcept { return spec_; }
  double exponent() const noexcept { return n_; }
  double delta_coefficient() const noexcept { return coeff_; }

  /// delta(t) for t >= 0; delta(0) = 0.
  double penetration_depth(double t) const;
  double surface_amplitude(double t) const;

  double temperature(double x, double t) const;
  /// T - T_inf, without the positivity check.
  double excess(double x, double t) const;
  double gradient(double x, double t) const;
  /// d2T/dx2. Unbounded at the front when n < 2.
  double second_gradient(double x, double t) const;
  double time_derivative(double x, double t) const;

  /// Integral of T - T_inf over the layer, A delta / (n + 1), and its exact rate of change.
  double heat_content(double t) const;
  double heat_content_rate(double t) const;

  ProfileCoefficients coefficients(double t) const;

private:
  void check_args(double x, double t) const;

  ProblemSpec spec_;
  double n_;
  double coeff_;
};

}  // namespace hbim
