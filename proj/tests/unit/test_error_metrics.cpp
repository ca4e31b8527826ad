#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "hbim/error_metrics.hpp"
#include "hbim/errors.hpp"
#include "hbim/profile.hpp"
#include "oracles.hpp"

using hbim::ErrorDomain;
using hbim::ProblemKind;
using hbim::ProblemSpec;

namespace {

ProblemSpec pt_spec() { return ProblemSpec::prescribed_temperature(300.0, 400.0, 1.0, 1e-5); }
ProblemSpec pf_spec() { return ProblemSpec::prescribed_flux(300.0, 1e4, 1.0, 1e-5); }

const double kPtStar = 2.0 / (std::numbers::pi - 2.0);
const double kPfStar = std::numbers::pi / (4.0 - std::numbers::pi);

std::vector<double> grid_over(double extent, int points) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = extent * i / (points - 1);
  g.back() = extent;
  return g;
}

double langford_oracle(const ProblemSpec& spec, double n, double t) {
  const hbim::HbimProfile p(spec, n);
  return oracle::langford_by_moments(spec.kind == ProblemKind::PrescribedFlux, n,
                                     p.delta_coefficient(), p.surface_amplitude(t), t,
                                     p.penetration_depth(t));
}

}  // namespace

TEST(AverageError, LayerAtCalibratedExponent) {
  const double value = hbim::average_error(pt_spec(), kPtStar, 100.0, ErrorDomain::Layer);
  const double semi_analytic = oracle::pt_layer_average_error(kPtStar);
  EXPECT_NEAR(value, semi_analytic, 1e-9);
  EXPECT_NEAR(value, -0.0045057581818638, 1e-12);

  // Fixed-grid cross-check in eta.
  const double c = std::sqrt(2.0 * kPtStar * (kPtStar + 1.0));
  const double grid = oracle::trapezoid(
      [&](double eta) { return std::erfc(0.5 * eta) - std::pow(1.0 - eta / c, kPtStar); }, 0.0, c,
      1000000) / c;
  EXPECT_NEAR(value, grid, 1e-9);
}

TEST(AverageError, ExtendedDomainVanishesAtPtOptimum) {
  for (double t : {1.0, 100.0, 1e5}) {
    EXPECT_LE(std::fabs(hbim::average_error(pt_spec(), kPtStar, t, ErrorDomain::Extended)), 1e-9);
  }
  EXPECT_GT(std::fabs(hbim::average_error(pt_spec(), 3.0, 100.0, ErrorDomain::Extended)), 1e-4);
}

TEST(AverageError, DomainExtent) {
  const double t = 100.0;
  EXPECT_DOUBLE_EQ(hbim::domain_extent(pt_spec(), 2.0, t, ErrorDomain::Layer),
                   hbim::HbimProfile(pt_spec(), 2.0).penetration_depth(t));
  EXPECT_DOUBLE_EQ(hbim::domain_extent(pt_spec(), 2.0, t, ErrorDomain::Extended),
                   12.0 * std::sqrt(1e-5 * t));
  // A deep layer is never cut by the truncation.
  EXPECT_DOUBLE_EQ(hbim::domain_extent(pt_spec(), 19.0, t, ErrorDomain::Extended),
                   hbim::HbimProfile(pt_spec(), 19.0).penetration_depth(t));
}

TEST(MaxAbsError, Examples) {
  const double t = 100.0;
  const auto grid = grid_over(12.0 * std::sqrt(1e-5 * t), 2048);
  const double at_star = hbim::max_abs_error(pt_spec(), kPtStar, t, grid);
  EXPECT_GT(at_star, 0.0);
  EXPECT_LT(at_star, hbim::max_abs_error(pt_spec(), 1.2, t, grid));
  const std::vector<double> outside = {0.0, 13.0 * std::sqrt(1e-5 * t)};
  EXPECT_THROW(hbim::max_abs_error(pt_spec(), kPtStar, t, outside), hbim::DomainError);
}

TEST(ErrorMetrics, PfSurfaceErrorVanishesAtOptimum) {
  const double t = 77.0;
  EXPECT_NEAR(hbim::theta_exact(pf_spec(), 0.0, t), 1.0, 1e-15);
  EXPECT_NEAR(hbim::theta_approx(pf_spec(), kPfStar, 0.0, t), 1.0, 1e-12);
  const auto grid = grid_over(12.0 * std::sqrt(1e-5 * t), 513);
  EXPECT_GT(hbim::max_abs_error(pf_spec(), kPfStar, t, grid), 1e-3);
}

TEST(LangfordResidual, MatchesMomentOracle) {
  for (const ProblemSpec& spec : {pt_spec(), pf_spec()}) {
    for (double n : {1.55, 1.6, kPtStar, 2.0, 2.5, kPfStar, 8.0, 20.0}) {
      for (double t : {1.0, 100.0}) {
        const double e = hbim::langford_residual(spec, n, t);
        EXPECT_GE(e, 0.0);
        EXPECT_NEAR(e / langford_oracle(spec, n, t), 1.0, 1e-8)
            << hbim::to_string(spec.kind) << " n=" << n << " t=" << t;
      }
    }
  }
}

TEST(LangfordResidual, DenseExponentScan) {
  for (const ProblemSpec& spec : {pt_spec(), pf_spec()}) {
    for (int i = 1; i <= 370; ++i) {
      const double n = 1.5 + 0.05 * i;
      EXPECT_NEAR(hbim::langford_residual(spec, n, 100.0) / langford_oracle(spec, n, 100.0), 1.0,
                  1e-8)
          << hbim::to_string(spec.kind) << " n=" << n;
    }
  }
}

TEST(LangfordResidual, GoldenValueAtPtOptimum) {
  // Frozen at first build; the moment oracle reproduces it independently.
  const double e = hbim::langford_residual(pt_spec(), kPtStar, 100.0);
  EXPECT_NEAR(e / langford_oracle(pt_spec(), kPtStar, 100.0), 1.0, 1e-8);
  EXPECT_NEAR(e / 0.0012095319325488071, 1.0, 1e-10);
}

TEST(LangfordResidual, TimeScaling) {
  for (double n : {kPtStar, kPfStar}) {
    const double ratio = hbim::langford_residual(pt_spec(), n, 400.0) /
                         hbim::langford_residual(pt_spec(), n, 100.0);
    EXPECT_NEAR(ratio / 0.125, 1.0, 1e-6) << n;
  }
  // The flux amplitude grows like sqrt(t), so the PF residual only falls like t^(-1/2).
  const double pf_ratio = hbim::langford_residual(pf_spec(), kPfStar, 400.0) /
                          hbim::langford_residual(pf_spec(), kPfStar, 100.0);
  EXPECT_NEAR(pf_ratio / 0.5, 1.0, 1e-6);
}

TEST(LangfordResidual, DivergesBelowThreshold) {
  EXPECT_THROW(hbim::langford_residual(pt_spec(), 1.5, 10.0), hbim::DivergenceError);
  EXPECT_THROW(hbim::langford_residual(pf_spec(), 1.2, 10.0), hbim::DivergenceError);
  EXPECT_THROW(hbim::langford_residual(pt_spec(), 2.0, 0.0), hbim::DomainError);
}

TEST(LangfordResidual, ResidualMatchesProfileDerivatives) {
  for (const ProblemSpec& spec : {pt_spec(), pf_spec()}) {
    const hbim::HbimProfile p(spec, 2.3);
    const double t = 12.0;
    const double delta = p.penetration_depth(t);
    for (double s = 0.05; s <= 1.0; s += 0.05) {
      const double x = (1.0 - s) * delta;
      const double direct = p.time_derivative(x, t) - spec.diffusivity * p.second_gradient(x, t);
      EXPECT_NEAR(hbim::profile_residual(spec, 2.3, s, t), direct,
                  1e-9 * std::fabs(direct) + 1e-12);
    }
  }
}

TEST(ErrorMetricsProperty, DiffusivityTimeExchange) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> n_dist(1.6, 6.0);
  for (int i = 0; i < 6; ++i) {
    const double n = n_dist(rng);
    for (ProblemSpec spec : {pt_spec(), pf_spec()}) {
      const double k = i % 2 ? 4.0 : 0.25;
      ProblemSpec scaled = spec;
      scaled.diffusivity *= k;
      const double t = 100.0;
      for (ErrorDomain d : {ErrorDomain::Layer, ErrorDomain::Extended}) {
        EXPECT_NEAR(hbim::average_error(spec, n, t, d), hbim::average_error(scaled, n, t / k, d),
                    1e-10);
      }
      const auto g1 = grid_over(hbim::domain_extent(spec, n, t, ErrorDomain::Layer), 300);
      const auto g2 = grid_over(hbim::domain_extent(scaled, n, t / k, ErrorDomain::Layer), 300);
      EXPECT_NEAR(hbim::max_abs_error(spec, n, t, g1), hbim::max_abs_error(scaled, n, t / k, g2),
                  1e-10);
      EXPECT_NEAR(hbim::langford_residual(scaled, n, t / k) / hbim::langford_residual(spec, n, t),
                  k * k, 1e-8 * k * k);
    }
  }
}

TEST(ErrorReport, Invariants) {
  for (const ProblemSpec& spec : {pt_spec(), pf_spec()}) {
    for (double n : {1.6, 2.0, 3.0, 5.0}) {
      for (ErrorDomain d : {ErrorDomain::Layer, ErrorDomain::Extended}) {
        const auto r = hbim::error_report(spec, n, 100.0, d);
        EXPECT_GE(r.max_abs_error, std::fabs(r.avg_error));
        EXPECT_GE(r.langford, 0.0);
        EXPECT_EQ(r.integration_domain, d);
        EXPECT_GT(r.domain_extent, 0.0);
      }
    }
  }
  EXPECT_THROW(hbim::error_report(pt_spec(), 1.3, 100.0, ErrorDomain::Layer),
               hbim::DivergenceError);
}
