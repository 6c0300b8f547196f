#pragma once

// Composite adaptive Simpson quadrature.  Callers pass explicit breakpoints
// at integrand kinks (the wavefunction modulus has one at each interaction
// center) so every panel sees a smooth integrand.

#include <cmath>
#include <vector>

#include "twindelta/errors.hpp"

namespace twindelta::quadrature {

namespace detail {

template <typename F>
double simpson_recurse(const F& f, double a, double c, double b, double fa,
                       double fc, double fb, double whole, double tol,
                       int depth) {
  double ca = 0.5 * (a + c);
  double cb = 0.5 * (c + b);
  double fca = f(ca);
  double fcb = f(cb);
  double left = (c - a) / 6.0 * (fa + 4.0 * fca + fc);
  double right = (b - c) / 6.0 * (fc + 4.0 * fcb + fb);
  double err = (left + right - whole) / 15.0;
  if (std::abs(err) <= tol || depth >= 52) {
    if (depth >= 52 && std::abs(err) > 1e3 * tol)
      throw convergence_error("adaptive_simpson: recursion depth exhausted");
    return left + right + err;
  }
  return simpson_recurse(f, a, ca, c, fa, fca, fc, left, 0.5 * tol, depth + 1) +
         simpson_recurse(f, c, cb, b, fc, fcb, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace detail

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  double c = 0.5 * (a + b);
  double fa = f(a), fb = f(b), fc = f(c);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fc + fb);
  return detail::simpson_recurse(f, a, c, b, fa, fc, fb, whole, tol, 0);
}

// Integral over [pts.front(), pts.back()] with a separate adaptive pass on
// each sub-panel; tol is split evenly across panels.
template <typename F>
double integrate_panels(const F& f, const std::vector<double>& pts,
                        double tol) {
  double total = 0.0;
  double panel_tol = tol / static_cast<double>(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    total += adaptive_simpson(f, pts[i], pts[i + 1], panel_tol);
  return total;
}

}  // namespace twindelta::quadrature
