#pragma once

#include <cmath>
#include <utility>

#include "hbim/errors.hpp"

namespace hbim::numerics {

struct RootOptions {
  double bisection_width = 1e-3;  ///< switch from bisection to secant below this bracket width
  double x_tol = 1e-12;           ///< stop once the last step is this small
  int max_iterations = 200;
};

struct RootResult {
  double root = 0.0;
  double value = 0.0;  ///< f(root)
  int iterations = 0;
};

/// Bracketed root of a continuous f on [lo, hi]: plain bisection until the bracket is
/// narrower than `bisection_width`, then secant steps that fall back to bisection
/// whenever they would leave the current bracket. Throws CalibrationError when
/// f(lo) and f(hi) have the same sign.
template <class F>
RootResult find_bracketed_root(F&& f, double lo, double hi, const RootOptions& opts = {}) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, flo, 0};
  if (fhi == 0.0) return {hi, fhi, 0};
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw CalibrationError("no sign change on bracket");
  }

  int it = 0;
  while (hi - lo > opts.bisection_width && it < opts.max_iterations) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    ++it;
    if (fmid == 0.0) return {mid, fmid, it};
    if (std::signbit(fmid) == std::signbit(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }

  // Secant iterates start from the bracket ends.
  double x_prev = lo, f_prev = flo;
  double x_curr = hi, f_curr = fhi;
  while (it < opts.max_iterations) {
    ++it;
    double next = x_curr - f_curr * (x_curr - x_prev) / (f_curr - f_prev);
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    const double fnext = f(next);
    const double step = std::fabs(next - x_curr);
    if (fnext == 0.0) return {next, fnext, it};
    if (std::signbit(fnext) == std::signbit(flo)) {
      lo = next;
      flo = fnext;
    } else {
      hi = next;
      fhi = fnext;
    }
    x_prev = x_curr;
    f_prev = f_curr;
    x_curr = next;
    f_curr = fnext;
    if (step <= opts.x_tol || hi - lo <= opts.x_tol) return {x_curr, f_curr, it};
  }
  throw CalibrationError("root finder exceeded its iteration limit");
}

}  // namespace hbim::numerics
