#pragma once

#include <string_view>
#include <vector>

#include "hbim/problem.hpp"

namespace hbim {

enum class CalibrationMethod { ClosedForm, RootFind };

std::string_view to_string(CalibrationMethod method);

/// Optimal profile exponent for one problem kind.
struct CalibrationResult {
  ProblemKind kind = ProblemKind::PrescribedTemperature;
  double n_star = 0.0;
  double delta_coeff = 0.0;  ///< hbi_delta_coefficient(kind, n_star)
  CalibrationMethod method = CalibrationMethod::ClosedForm;
  double residual = 0.0;  ///< |normalized surface entropy mismatch| at n_star
};

/// Exponent that zeroes the surface entropy mismatch:
///   PT: sqrt(2n(n+1)) = n sqrt(pi)   =>  n* = 2 / (pi - 2)
///   PF: sqrt(n(n+1))  = 2n / sqrt(pi) =>  n* = pi / (4 - pi)
double egm_exponent(ProblemKind kind);

/// Residual is evaluated on the default spec of `kind` at t = 1 s.
CalibrationResult calibrate_closed_form(ProblemKind kind);

/// Bracketed search for the zero of n -> delta_sigma_surface(spec, n, t_probe) on
/// [1 + 1e-6, 20]. Throws CalibrationError when there is no sign change.
CalibrationResult calibrate_root_find(const ProblemSpec& spec, double t_probe);

inline constexpr double kRootBracketLow = 1.0 + 1e-6;
inline constexpr double kRootBracketHigh = 20.0;
inline constexpr double kMatchTolerance = 1e-9;

/// One time sample of a surface-matching check.
struct MatchSample {
  double t = 0.0;
  double approx = 0.0;
  double exact = 0.0;
  double relative_difference = 0.0;
};

struct MatchReport {
  bool passed = false;
  double tolerance = kMatchTolerance;
  double max_relative_difference = 0.0;
  std::vector<MatchSample> samples;
};

/// Times used by the matching checks, s.
inline constexpr double kMatchSampleTimes[] = {1e-2, 1.0, 1e2, 1e4, 1e6};

/// PT: surface gradients of both fields agree (equal surface heat flux).
MatchReport flux_match_check(const ProblemSpec& spec, double n);
MatchReport flux_match_check(const ProblemSpec& spec, const CalibrationResult& result);

/// PF: surface temperatures agree, relative to the exact surface excess.
MatchReport surface_temp_match_check(const ProblemSpec& spec, double n);
MatchReport surface_temp_match_check(const ProblemSpec& spec, const CalibrationResult& result);

}  // namespace hbim
