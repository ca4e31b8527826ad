#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hbim/errors.hpp"
#include "hbim/exact_solution.hpp"
#include "oracles.hpp"

using hbim::ExactSolution;
using hbim::ProblemSpec;

namespace {

ProblemSpec pt_spec() { return ProblemSpec::prescribed_temperature(300.0, 400.0, 1.0, 1e-5); }
ProblemSpec pf_spec() { return ProblemSpec::prescribed_flux(300.0, 1e4, 1.0, 1e-5); }

}  // namespace

TEST(ExactTemperature, SurfaceValues) {
  const ExactSolution pt(pt_spec());
  const ExactSolution pf(pf_spec());
  for (double t : {1e-3, 1.0, 100.0, 1e5}) {
    EXPECT_EQ(pt.temperature(0.0, t), 400.0);
    EXPECT_NEAR(pf.temperature(0.0, t), 300.0 + 2e4 * std::sqrt(1e-5 * t / std::numbers::pi),
                1e-10);
  }
}

TEST(ExactTemperature, ErfcExample) {
  const ExactSolution pt(pt_spec());
  const double x = 2.0 * std::sqrt(1e-5 * 100.0);
  EXPECT_NEAR(pt.temperature(x, 100.0), 315.7299207050285, 1e-9);
}

TEST(ExactTemperature, DecaysToAmbient) {
  const ExactSolution pt(pt_spec());
  const ExactSolution pf(pf_spec());
  const double far = 40.0 * std::sqrt(1e-5 * 100.0);
  EXPECT_EQ(pt.temperature(far, 100.0), 300.0);
  EXPECT_EQ(pf.temperature(far, 100.0), 300.0);
}

TEST(ExactTemperature, FluxFormsAgree) {
  const ExactSolution pf(pf_spec());
  for (double eta = 0.0; eta <= 8.0; eta += 0.25) {
    for (double t : {0.5, 100.0, 3e4}) {
      const double x = eta * std::sqrt(1e-5 * t);
      EXPECT_NEAR(pf.flux_temperature_expanded(x, t) - 300.0, pf.excess(x, t),
                  1e-12 * pf.surface_excess(t))
          << eta << " " << t;
    }
  }
  EXPECT_THROW(ExactSolution(pt_spec()).flux_temperature_expanded(0.0, 1.0), hbim::DomainError);
}

TEST(ExactGradient, Examples) {
  const ExactSolution pt(pt_spec());
  const ExactSolution pf(pf_spec());
  const double t = 100.0;
  EXPECT_NEAR(pt.gradient(0.0, t), -100.0 / std::sqrt(std::numbers::pi * 1e-5 * t), 1e-9);
  EXPECT_EQ(pf.gradient(0.0, t), -1e4);
  EXPECT_LE(std::fabs(pt.gradient(12.0 * std::sqrt(1e-5 * t), t)), 1e-12);
}

TEST(ExactTimeDerivative, Examples) {
  const ExactSolution pt(pt_spec());
  const ExactSolution pf(pf_spec());
  EXPECT_EQ(pt.time_derivative(0.0, 5.0), 0.0);
  for (double t : {0.1, 10.0, 1e4}) {
    EXPECT_NEAR(pf.time_derivative(0.0, t) / (1e4 * std::sqrt(1e-5 / (std::numbers::pi * t))),
                1.0, 1e-14);
  }
}

TEST(ExactSolution, DomainErrors) {
  const ExactSolution pt(pt_spec());
  EXPECT_THROW(pt.temperature(0.0, 0.0), hbim::DomainError);
  EXPECT_THROW(pt.gradient(0.0, -1.0), hbim::DomainError);
  EXPECT_THROW(pt.time_derivative(-1e-3, 1.0), hbim::DomainError);
  EXPECT_THROW(ProblemSpec::prescribed_temperature(-1.0, 400.0, 1.0, 1.0), hbim::DomainError);
  EXPECT_THROW(ProblemSpec::prescribed_temperature(300.0, 300.0, 1.0, 1.0), hbim::DomainError);
  EXPECT_THROW(ProblemSpec::prescribed_flux(300.0, 0.0, 1.0, 1.0), hbim::DomainError);
  EXPECT_THROW(ProblemSpec::prescribed_flux(300.0, 1.0, 0.0, 1.0), hbim::DomainError);
}

TEST(ExactSolution, CoolingFluxViolatesPositivity) {
  const ExactSolution pf(ProblemSpec::prescribed_flux(300.0, -1e5, 1.0, 1e-5));
  try {
    pf.temperature(0.0, 100.0);
    FAIL() << "expected PositivityError";
  } catch (const hbim::PositivityError& e) {
    EXPECT_EQ(e.x(), 0.0);
    EXPECT_EQ(e.t(), 100.0);
    EXPECT_LT(e.temperature(), 0.0);
    EXPECT_NE(std::string(e.what()).find("t=100"), std::string::npos);
  }
}

// The analytic time derivative against second differences of the temperature itself.
TEST(ExactSolutionProperty, SatisfiesHeatEquation) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> log_t(-1.0, 5.0);
  std::uniform_real_distribution<double> eta(0.0, 6.0);
  for (const ProblemSpec& spec : {pt_spec(), pf_spec()}) {
    const ExactSolution sol(spec);
    for (int i = 0; i < 200; ++i) {
      const double t = std::pow(10.0, log_t(rng));
      const double root_at = std::sqrt(spec.diffusivity * t);
      const double x = std::max(eta(rng), 0.01) * root_at;
      const double h = 1e-3 * root_at;
      const double lap = oracle::central_second([&](double y) { return sol.temperature(y, t); }, x, h);
      const double dt = sol.time_derivative(x, t);
      EXPECT_LE(std::fabs(dt - spec.diffusivity * lap) / std::max(1.0, std::fabs(dt)), 1e-6)
          << "x=" << x << " t=" << t;
      EXPECT_NEAR(sol.second_gradient(x, t) * spec.diffusivity, dt,
                  1e-12 * std::max(1.0, std::fabs(dt)));
    }
  }
}

TEST(ExactSolutionProperty, TimeDerivativeMatchesDifferenceInTime) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> log_t(-1.0, 4.0);
  std::uniform_real_distribution<double> eta(0.0, 5.0);
  for (const ProblemSpec& spec : {pt_spec(), pf_spec()}) {
    const ExactSolution sol(spec);
    for (int i = 0; i < 100; ++i) {
      const double t = std::pow(10.0, log_t(rng));
      const double x = eta(rng) * std::sqrt(spec.diffusivity * t);
      const double fd =
          oracle::central_first([&](double s) { return sol.excess(x, s); }, t, 1e-4 * t);
      const double dt = sol.time_derivative(x, t);
      EXPECT_NEAR(fd, dt, 1e-7 * std::max(std::fabs(dt), sol.surface_excess(t) / t));
    }
  }
}

TEST(ExactSolutionProperty, SelfSimilar) {
  const ExactSolution pt(pt_spec());
  for (double eta = 0.0; eta <= 6.0; eta += 0.5) {
    const double t1 = 3.0, t2 = 7000.0;
    const double th1 = pt.excess(eta * std::sqrt(1e-5 * t1), t1) / 100.0;
    const double th2 = pt.excess(eta * std::sqrt(1e-5 * t2), t2) / 100.0;
    EXPECT_NEAR(th1, th2, 1e-12) << eta;
  }
}
