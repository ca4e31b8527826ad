#pragma once

// Error-function family used by the closed-form reference solutions.
//
// Implemented with W. J. Cody's rational Chebyshev approximations (Math. Comp. 1969),
// which reach full double precision on every interval. All functions are pure and
// throw DomainError for non-finite input.

namespace hbim::special {

double erf(double x);

/// 1 - erf(x), evaluated without cancellation for large positive x.
double erfc(double x);

/// Scaled complement exp(x^2) * erfc(x), for x >= 0.
double erfcx(double x);

/// First repeated integral of erfc: exp(-x^2)/sqrt(pi) - x erfc(x), for x >= 0.
/// Satisfies d/dx ierfc(x) = -erfc(x) and ierfc(0) = 1/sqrt(pi).
double ierfc(double x);

}  // namespace hbim::special
