#pragma once

// Grid bracketing + bisection for smooth 1D root problems.

#include <cmath>
#include <functional>
#include <vector>

namespace twindelta::rootscan {

inline double bisect(const std::function<double(double)>& f, double a,
                     double b, double fa, double tol) {
  for (int it = 0; it < 120 && b - a > tol; ++it) {
    double m = 0.5 * (a + b);
    double fm = f(m);
    if (fm == 0.0) return m;
    if ((fa < 0) != (fm < 0))
      b = m;
    else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

// Ascending roots of a continuous function on [lo, hi], bracketed on a grid
// of step dq and refined to tol.  Stops early after max_roots.
inline std::vector<double> scan_roots(const std::function<double(double)>& f,
                                      double lo, double hi, double dq,
                                      double tol, int max_roots) {
  std::vector<double> roots;
  double qa = lo;
  double fa = f(qa);
  while (qa < hi && static_cast<int>(roots.size()) < max_roots) {
    double qb = std::min(qa + dq, hi);
    double fb = f(qb);
    if (fa == 0.0)
      roots.push_back(qa);
    else if ((fa < 0) != (fb < 0))
      roots.push_back(bisect(f, qa, qb, fa, tol));
    qa = qb;
    fa = fb;
  }
  return roots;
}

}  // namespace twindelta::rootscan
