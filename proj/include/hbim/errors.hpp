#pragma once

#include <stdexcept>
#include <string>

namespace hbim {

/// Argument outside the mathematical domain of an operation (t <= 0, n <= 1, NaN input, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// An evaluated absolute temperature came out non-positive. Entropy terms divide by T^2,
/// so the offending point is carried along for diagnostics.
class PositivityError : public std::runtime_error {
public:
  PositivityError(double x, double t, double temperature);
  /// For checks made away from any particular (x, t); x() and t() are NaN.
  explicit PositivityError(double temperature);

  double x() const noexcept { return x_; }
  double t() const noexcept { return t_; }
  double temperature() const noexcept { return temperature_; }

private:
  double x_;
  double t_;
  double temperature_;
};

/// Quadrature did not converge, or an improper integral diverges.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivergenceError : public NumericError {
public:
  using NumericError::NumericError;
};

/// The surface entropy mismatch has no sign change on the search bracket.
class CalibrationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace hbim
