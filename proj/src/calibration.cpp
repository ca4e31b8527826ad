#include "hbim/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hbim/entropy.hpp"
#include "hbim/errors.hpp"
#include "hbim/exact_solution.hpp"
#include "hbim/numerics/root_finding.hpp"
#include "hbim/profile.hpp"

namespace hbim {

std::string_view to_string(CalibrationMethod method) {
  return method == CalibrationMethod::ClosedForm ? "closed_form" : "root_find";
}

double egm_exponent(ProblemKind kind) {
  constexpr double pi = std::numbers::pi;
  return kind == ProblemKind::PrescribedTemperature ? 2.0 / (pi - 2.0) : pi / (4.0 - pi);
}

CalibrationResult calibrate_closed_form(ProblemKind kind) {
  ProblemSpec spec;
  spec.kind = kind;
  const double n = egm_exponent(kind);
  return {kind, n, hbi_delta_coefficient(kind, n), CalibrationMethod::ClosedForm,
          std::fabs(normalized_delta_sigma_surface(spec, n, 1.0))};
}

CalibrationResult calibrate_root_find(const ProblemSpec& spec, double t_probe) {
  if (!(t_probe > 0.0) || !std::isfinite(t_probe)) {
    throw DomainError("calibration probe time must be > 0");
  }
  spec.validate();
  const double sigma_exact = surface_teg(spec, TegSource::exact(), t_probe);
  auto mismatch = [&](double n) { return delta_sigma_surface(spec, n, t_probe); };
  const numerics::RootResult root =
      numerics::find_bracketed_root(mismatch, kRootBracketLow, kRootBracketHigh);
  return {spec.kind, root.root, hbi_delta_coefficient(spec.kind, root.root),
          CalibrationMethod::RootFind, std::fabs(root.value / sigma_exact)};
}

namespace {

template <class Sampler>
MatchReport run_match(Sampler&& sample) {
  MatchReport report;
  report.passed = true;
  for (double t : kMatchSampleTimes) {
    MatchSample s = sample(t);
    report.max_relative_difference =
        std::max(report.max_relative_difference, s.relative_difference);
    report.passed = report.passed && s.relative_difference <= report.tolerance;
    report.samples.push_back(s);
  }
  return report;
}

}  // namespace

MatchReport flux_match_check(const ProblemSpec& spec, double n) {
  if (spec.kind != ProblemKind::PrescribedTemperature) {
    throw DomainError("flux match check applies to prescribed-temperature problems");
  }
  const HbimProfile approx(spec, n);
  const ExactSolution exact(spec);
  return run_match([&](double t) {
    const double ga = approx.gradient(0.0, t);
    const double ge = exact.gradient(0.0, t);
    return MatchSample{t, ga, ge, std::fabs(ga - ge) / std::fabs(ge)};
  });
}

MatchReport flux_match_check(const ProblemSpec& spec, const CalibrationResult& result) {
  return flux_match_check(spec, result.n_star);
}

MatchReport surface_temp_match_check(const ProblemSpec& spec, double n) {
  if (spec.kind != ProblemKind::PrescribedFlux) {
    throw DomainError("surface temperature match check applies to prescribed-flux problems");
  }
  const HbimProfile approx(spec, n);
  const ExactSolution exact(spec);
  return run_match([&](double t) {
    const double ta = approx.temperature(0.0, t);
    const double te = exact.temperature(0.0, t);
    return MatchSample{t, ta, te, std::fabs(ta - te) / std::fabs(exact.surface_excess(t))};
  });
}

MatchReport surface_temp_match_check(const ProblemSpec& spec, const CalibrationResult& result) {
  return surface_temp_match_check(spec, result.n_star);
}

}  // namespace hbim
