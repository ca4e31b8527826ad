#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "hbim/errors.hpp"

namespace hbim::numerics {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 40;
  int initial_panels = 16;
};

namespace detail {

template <class F>
double simpson_refine(F& f, double a, double fa, double m, double fm, double b, double fb,
                      double whole, double tol, int depth, int max_depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth >= max_depth) {
    throw NumericError("adaptive Simpson did not converge on [" + std::to_string(a) + ", " +
                       std::to_string(b) + "] within depth " + std::to_string(max_depth));
  }
  return simpson_refine(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1, max_depth) +
         simpson_refine(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace detail

/// Adaptive Simpson with Richardson correction. The interval is first cut into
/// `initial_panels` equal panels so narrow features are not missed by the first
/// five samples; their sum sets the relative part of the tolerance. Throws
/// NumericError if any branch needs more than `max_depth` bisections.
template <class F>
double adaptive_simpson(F&& f, double a, double b, const QuadratureOptions& opts = {}) {
  if (a == b) return 0.0;
  const int panels = opts.initial_panels > 0 ? opts.initial_panels : 1;
  const double h = (b - a) / panels;

  struct Panel {
    double a, fa, m, fm, b, fb, s;
  };
  std::vector<Panel> coarse;
  coarse.reserve(static_cast<std::size_t>(panels));
  double estimate = 0.0;
  double x0 = a;
  double f0 = f(a);
  for (int i = 0; i < panels; ++i) {
    const double x2 = (i + 1 == panels) ? b : a + (i + 1) * h;
    const double x1 = 0.5 * (x0 + x2);
    const double f1 = f(x1);
    const double f2 = f(x2);
    const double s = (x2 - x0) / 6.0 * (f0 + 4.0 * f1 + f2);
    coarse.push_back({x0, f0, x1, f1, x2, f2, s});
    estimate += s;
    x0 = x2;
    f0 = f2;
  }

  const double tol = std::fmax(opts.abs_tol, opts.rel_tol * std::fabs(estimate)) / panels;
  double total = 0.0;
  for (const Panel& p : coarse) {
    total += detail::simpson_refine(f, p.a, p.fa, p.m, p.fm, p.b, p.fb, p.s, tol, 0,
                                    opts.max_depth);
  }
  return total;
}

}  // namespace hbim::numerics
