#pragma once

// Even-sector spectrum of the merged-delta (contact) limit c -> 0: a single
// delta of strength 2g at the origin.  Matching the derivative jump of the
// even solution phi = D_Q(|x|) gives
//     D_{Q+1}(0) + g D_Q(0) = 0,
// an entire function of Q once written with reciprocal gammas, so a plain
// scan-and-bisect finds the roots.  Odd levels are dark to a contact
// interaction and stay at n + 1/2.

#include <cmath>
#include <vector>

#include "twindelta/errors.hpp"
#include "twindelta/rootscan.hpp"
#include "twindelta/specfun.hpp"

namespace twindelta::contact {

inline double matching_function(double q, double g) {
  using namespace specfun::detail;
  // D_nu(0) = sqrt(pi) 2^{nu/2} / Gamma((1-nu)/2)
  double d0 = kSqrtPi * std::exp2(0.5 * q) * rgamma(0.5 * (1.0 - q));
  double d1 = kSqrtPi * std::exp2(0.5 * (q + 1.0)) * rgamma(-0.5 * q);
  return d1 + g * d0;
}

// Lowest `count` even-sector orders Q of the contact problem.
inline std::vector<double> even_q_roots(double g, int count,
                                        double q_min = -40.0,
                                        double q_max = 40.0, double dq = 0.01,
                                        double tol = 1e-12) {
  double lo = g >= 0.0 ? -0.75 : q_min;
  auto roots = rootscan::scan_roots(
      [g](double q) { return matching_function(q, g); }, lo, q_max, dq, tol,
      count);
  if (static_cast<int>(roots.size()) < count)
    throw range_exhausted_error(
        "contact::even_q_roots: fewer roots than requested in the Q window");
  return roots;
}

}  // namespace twindelta::contact
