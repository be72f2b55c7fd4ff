#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace loewner {

namespace detail {

struct Panel {
  double value;
  double error;
  double l1;
};

/// One non-adaptive 31-point Gauss-Kronrod panel. Boost reports the error of
/// the [-1, 1] image unscaled (its L1 norm is already scaled).
template <class F>
Panel gk31(F& f, double a, double b) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  double err = 0.0, l1 = 0.0;
  const double v = GK::integrate(f, a, b, 0, 0.0, &err, &l1);
  return {v, err * 0.5 * std::abs(b - a), l1};
}

template <class F>
double adapt(F& f, double a, double b, const Panel& p, double abs_tol, unsigned depth) {
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * p.l1;
  if (depth == 0 || p.error <= std::max(abs_tol, floor)) return p.value;
  const double mid = 0.5 * (a + b);
  const Panel left = gk31(f, a, mid), right = gk31(f, mid, b);
  return adapt(f, a, mid, left, 0.5 * abs_tol, depth - 1) + adapt(f, mid, b, right, 0.5 * abs_tol, depth - 1);
}

}  // namespace detail

/// Adaptive bisection with 31-point Gauss-Kronrod panels on a finite interval.
/// Stops when the panel errors sum below rel_tol times the first estimate,
/// or at the roundoff floor of each panel.
template <class F>
double integrate(F&& f, double lo, double hi, double rel_tol = 1e-14, unsigned max_depth = 30) {
  if (lo == hi) return 0.0;
  const detail::Panel top = detail::gk31(f, lo, hi);
  return detail::adapt(f, lo, hi, top, rel_tol * std::abs(top.value), max_depth);
}

}  // namespace loewner
