#pragma once

// Real-order parabolic cylinder functions D_Q(x), a real-argument gamma,
// and Hermite polynomials/roots, to the accuracy the spectral solvers need.
//
// D_Q solves Weber's equation  y'' + (Q + 1/2 - x^2/4) y = 0  and decays as
// x -> +inf.  Evaluation strategy:
//   * |x| below a switch radius: the two Kummer series about x = 0,
//         D_Q(x) = sqrt(pi) 2^{Q/2} [  y1(x) / Gamma((1-Q)/2)
//                                    - sqrt(2) y2(x) / Gamma(-Q/2) ],
//         y1 = e^{-x^2/4} M(-Q/2, 1/2, x^2/2),
//         y2 = x e^{-x^2/4} M((1-Q)/2, 3/2, x^2/2),
//     written with reciprocal gammas so integer orders need no special
//     casing (the non-terminating series gets an exactly zero coefficient).
//   * x above the switch radius: the large-x expansion
//         D_Q(x) ~ e^{-x^2/4} x^Q [1 - Q(Q-1)/(2x^2) + ...],
//     truncated at its smallest term.
//   * Q < -1: the two series above cancel to ~e^{x sqrt(2|Q|)} relative,
//     so the Laplace-type representation
//         D_Q(x) = e^{-x^2/4}/Gamma(-Q) Int_0^inf t^{-Q-1} e^{-t^2/2-xt} dt
//     is used instead; its integrand is positive, so there is no
//     cancellation at any x.
//   * large negative x (non-integer Q): the connection formula
//         D_Q(-x) = cos(pi Q) D_Q(x)
//                   + sqrt(2 pi)/Gamma(-Q) e^{x^2/4} x^{-Q-1} V-series(x).
//   Non-negative integer order at negative x reduces exactly by parity.
//
// est_abs_error tracks the truncation bound of whichever branch produced the
// value (last/first-omitted term with a geometric slack).  Rounding noise of
// the series branch is monitored internally; past the classical turning
// point, where the true function is exponentially small, the series is
// abandoned for the asymptotic form as soon as its rounding floor would
// exceed the asymptotic magnitude.  This keeps far tails sign-correct and
// monotone instead of returning cancellation noise.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "twindelta/errors.hpp"
#include "twindelta/quadrature.hpp"
#include "twindelta/tridiag.hpp"

namespace twindelta::specfun {

struct EvalResult {
  double value = 0.0;
  double est_abs_error = 0.0;
};

namespace detail {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
inline constexpr double kSqrt2Pi = 2.50662827463100050241576528481104525;
inline constexpr double kEps = 2.220446049250313e-16;
inline constexpr double kOrderCap = 155.0;  // keeps every internal gamma finite
inline constexpr double kArgCap = 60.0;

// sin(pi x) / cos(pi x) with exact reduction: fmod and the nearest-integer
// split are exact in binary floating point, so results keep full relative
// precision near the zeros.  Integer x gives exactly 0 / +-1.
inline double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  double n = std::round(r);
  double d = r - n;  // |d| <= 0.5, exact
  double s = std::sin(kPi * d);
  return (std::fmod(n, 2.0) == 0.0) ? s : -s;
}

inline double cos_pi(double x) {
  double r = std::fmod(x, 2.0);
  double n = std::round(r);
  double d = r - n;
  double c = std::cos(kPi * d);
  return (std::fmod(n, 2.0) == 0.0) ? c : -c;
}

inline bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// Lanczos (g = 7, 9 terms); relative error ~1e-15 over the positive axis.
inline double lanczos_sum(double z) {
  static constexpr double c[9] = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  double s = c[0];
  for (int k = 1; k < 9; ++k) s += c[k] / (z - 1.0 + k);
  return s;
}

// Gamma(z) for z >= 0.5.  Above z = 50 the power t^{z-1/2} would overflow
// long before Gamma itself does, so switch to the exp/log form there.
inline double gamma_positive(double z) {
  double t = z + 6.5;
  double a = lanczos_sum(z);
  if (z > 50.0)
    return std::exp((z - 0.5) * std::log(t) - t + std::log(kSqrt2Pi * a));
  return kSqrt2Pi * std::pow(t, z - 0.5) * std::exp(-t) * a;
}

// 1/Gamma(x): entire, exactly zero at the poles of Gamma.
inline double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x >= 0.5) return 1.0 / gamma_positive(x);
  return sin_pi(x) * gamma_positive(1.0 - x) / kPi;
}

struct KummerSum {
  double sum = 1.0;
  double abs_sum = 1.0;   // sum of |terms|, for rounding-noise tracking
  double tail = 0.0;      // truncation bound in series units
  bool overflow = false;
};

// M(a, b, z) = sum_j (a)_j/(b)_j z^j/j!  for b in {1/2, 3/2}, z >= 0.
// abs_cut is the absolute (series-unit) size below which terms no longer
// matter to the caller; summation continues until two consecutive terms are
// below it and the term ratio is safely contractive.
inline KummerSum kummer(double a, double b, double z, double abs_cut) {
  KummerSum r;
  if (z == 0.0) return r;
  double term = 1.0;
  double comp = 0.0;
  int below = 0;
  const int max_terms = 4000;
  for (int j = 0; j < max_terms; ++j) {
    term *= (a + j) / (b + j) * z / (j + 1);
    if (term == 0.0) return r;  // terminating (polynomial) case
    double y = term - comp;
    double t = r.sum + y;
    comp = (t - r.sum) - y;
    r.sum = t;
    r.abs_sum += std::abs(term);
    if (std::isinf(r.sum) || std::isinf(term)) {
      r.overflow = true;
      return r;
    }
    double ratio = std::abs(a + j + 1) / (b + j + 1) * z / (j + 2);
    if (ratio < 0.7 && std::abs(term) < abs_cut) {
      if (++below >= 2) {
        r.tail = std::abs(term) * ratio / (1.0 - ratio);
        return r;
      }
    } else {
      below = 0;
    }
  }
  throw accuracy_error("kummer: series did not converge within term cap");
}

struct SeriesEval {
  double value = 0.0;
  double trunc = 0.0;
  double noise = 0.0;  // rounding floor, absolute
};

// Power-series branch about x = 0 (valid for any x; accurate while the
// two parity components do not cancel catastrophically).
inline SeriesEval pcf_series(double q, double x) {
  const double z = 0.5 * x * x;
  const double gauss = std::exp(-0.5 * z);
  const double p1 = kSqrtPi * std::exp2(0.5 * q) * rgamma(0.5 * (1.0 - q));
  const double p2 =
      -kSqrtPi * std::exp2(0.5 * (q + 1.0)) * rgamma(-0.5 * q);
  SeriesEval r;
  if (p1 != 0.0) {
    double scale = std::max(std::abs(p1) * gauss, 1e-290);
    KummerSum s = kummer(-0.5 * q, 0.5, z, 1e-13 / scale);
    if (s.overflow) {
      r.value = std::numeric_limits<double>::infinity();
      r.trunc = r.noise = std::numeric_limits<double>::infinity();
      return r;
    }
    r.value += p1 * gauss * s.sum;
    r.trunc += std::abs(p1) * gauss * s.tail;
    r.noise += std::abs(p1) * gauss * s.abs_sum;
  }
  if (p2 != 0.0 && x != 0.0) {
    double scale = std::max(std::abs(p2 * x) * gauss, 1e-290);
    KummerSum s = kummer(0.5 * (1.0 - q), 1.5, z, 1e-13 / scale);
    if (s.overflow) {
      r.value = p2 * x < 0 ? -std::numeric_limits<double>::infinity()
                           : std::numeric_limits<double>::infinity();
      r.trunc = r.noise = std::numeric_limits<double>::infinity();
      return r;
    }
    r.value += p2 * x * gauss * s.sum;
    r.trunc += std::abs(p2 * x) * gauss * s.tail;
    r.noise += std::abs(p2 * x) * gauss * s.abs_sum;
  }
  r.noise *= 4.0 * kEps;
  return r;
}

// Large-x expansion.  The numerator factors (q-2s+2)(q-2s+1) fall in
// magnitude until 2s passes q and grow afterwards, so |T_s| may rise once
// at the start, falls through a valley near 2s ~ q, and (for non-integer q)
// eventually diverges.  Sum up to the valley floor; the series alternates
// there, so the first omitted term bounds the truncation error.  For
// integer q >= 0 a factor hits zero exactly and the sum is a polynomial.
inline EvalResult pcf_asymptotic(double q, double x) {
  const double lead = std::exp(-0.25 * x * x + q * std::log(x));
  double sum = 1.0;
  double term = 1.0;
  for (int s = 1; s <= 300; ++s) {
    double next =
        -term * (q - 2.0 * s + 2.0) * (q - 2.0 * s + 1.0) / (2.0 * s * x * x);
    if (next == 0.0) return {lead * sum, 0.0};
    if (2.0 * s > q + 2.0 && std::abs(next) >= std::abs(term))
      return {lead * sum, lead * std::abs(next)};
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17)
      return {lead * sum, lead * std::abs(term)};
  }
  return {lead * sum, lead * std::abs(term)};
}

// V-type series entering the negative-argument connection formula:
// sum_s (q+1)(q+2)...(q+2s) / (s! 2^s x^{2s}), summed to its smallest term.
inline EvalResult v_asymptotic(double q, double x) {
  double sum = 1.0;
  double term = 1.0;
  for (int s = 1; s <= 300; ++s) {
    double next =
        term * (q + 2.0 * s - 1.0) * (q + 2.0 * s) / (2.0 * s * x * x);
    if (next == 0.0) return {sum, 0.0};
    if (2.0 * s > -q + 2.0 && std::abs(next) >= std::abs(term))
      return {sum, std::abs(next)};
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17) return {sum, std::abs(term)};
  }
  return {sum, std::abs(term)};
}

// Deep negative order: the two parity series cancel to ~e^{2x sqrt|q|}
// relative, which destroys the value long before Q reaches the default
// window floor of -40.  There the classical Laplace-type representation
//   D_Q(x) = e^{-x^2/4} / Gamma(-Q) * Int_0^inf t^{-Q-1} e^{-t^2/2 - x t} dt
// (valid Q < 0) has a strictly positive integrand and no cancellation.
// Evaluated in log scale around the integrand peak.
inline EvalResult pcf_integral_negative_order(double q, double x) {
  const double m = -q - 1.0;  // >= 0
  // Substituting t = u^2 removes the t^m endpoint cusp and shifts the
  // effective power to m + 1/2, so the u-integrand always has a genuine
  // interior peak:  g(u) = 2 u^{2m+1} e^{-u^4/2 - x u^2}.
  const double p = 2.0 * m + 1.0;
  auto log_g = [p, x](double u) {
    double w = u * u;
    return p * std::log(u) - 0.5 * w * w - x * w;
  };
  const double wstar = 0.5 * (-x + std::sqrt(x * x + 2.0 * p));
  const double ustar = std::sqrt(wstar);
  const double phi0 = log_g(ustar);
  double curv = p / wstar + 6.0 * wstar + 2.0 * x;  // -g''(u*)
  double sigma = 1.0 / std::sqrt(curv);
  double lo = std::max(0.0, ustar - 11.0 * sigma);
  double hi = ustar + 11.0 * sigma;
  // the curvature window can miss slow tails; expand until negligible
  while (log_g(hi) - phi0 > -46.0) hi *= 1.6;
  while (lo > 0.0 && log_g(lo) - phi0 > -46.0)
    lo = lo > 1e-8 * ustar ? 0.5 * lo : 0.0;
  auto g = [&](double u) {
    return u > 0.0 ? 2.0 * std::exp(log_g(u) - phi0) : 0.0;
  };
  double integral = quadrature::adaptive_simpson(g, lo, hi, 1e-12 * (hi - lo));
  if (!(integral > 0.0)) return {0.0, 0.0};
  double log_total =
      -0.25 * x * x + phi0 + std::log(integral) - std::lgamma(-q);
  if (log_total > 709.0)
    return {std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
  double value = std::exp(log_total);
  double rel = 1e-12 * (hi - lo) / integral +
               64.0 * kEps * (1.0 + std::abs(log_total));
  return {value, rel * value};
}

// D_Q(-x) for x > 0 via the connection formula.  Used only once the series
// would overflow; the growing part may itself overflow, in which case the
// honest double is +-inf.
inline EvalResult pcf_negative_connection(double q, double x) {
  EvalResult dec = pcf_asymptotic(q, x);
  double rg = rgamma(-q);
  EvalResult v = v_asymptotic(q, x);
  double log_grow = 0.25 * x * x - (q + 1.0) * std::log(x);
  double cosq = cos_pi(q);
  if (log_grow > 708.0) {
    double sgn = (rg * v.value < 0) ? -1.0 : 1.0;
    return {sgn * std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
  }
  double grow = kSqrt2Pi * rg * std::exp(log_grow);
  double value = cosq * dec.value + grow * v.value;
  double err = std::abs(cosq) * dec.est_abs_error + std::abs(grow) * v.est_abs_error;
  return {value, err};
}

}  // namespace detail

// Gamma(x) for real non-pole x; relative error <= ~1e-14 for |x| <= 30.
inline double gamma_real(double x) {
  if (detail::is_nonpositive_integer(x))
    throw pole_error("gamma_real: pole at non-positive integer argument");
  if (x >= 0.5) return detail::gamma_positive(x);
  double s = detail::sin_pi(x);
  return detail::kPi / (s * detail::gamma_positive(1.0 - x));
}

// Weber parabolic cylinder function D_Q(x).
inline EvalResult pcf_d(double q, double x) {
  using namespace detail;
  if (!(std::abs(q) <= kOrderCap))
    throw std::domain_error("pcf_d: order outside supported range");
  if (!(std::abs(x) <= kArgCap))
    throw std::domain_error("pcf_d: argument outside supported range");

  // Hermite-reduction parity shortcut: valid for non-negative integer
  // order only (negative integer orders are not parity eigenfunctions).
  const bool q_integer = (q == std::round(q));
  if (x < 0.0 && q_integer && q >= 0.0) {
    EvalResult r = pcf_d(q, -x);
    double sgn = (std::fmod(q, 2.0) == 0.0) ? 1.0 : -1.0;
    return {sgn * r.value, r.est_abs_error};
  }

  // The parity-series decomposition cancels increasingly badly as the
  // order drops (roughly e^{x sqrt(2|q|)} relative), so the whole q < -1
  // range uses the cancellation-free integral representation.
  if (q < -1.0 || (q == -1.0 && x >= 0.0))
    return detail::pcf_integral_negative_order(q, x);

  const double x_switch = std::max(6.0, 2.0 * std::sqrt(std::abs(q) + 1.0));
  if (x >= 0.0) {
    if (x <= x_switch) {
      SeriesEval s = pcf_series(q, x);
      // Beyond the turning point the function decays like the asymptotic
      // leading term; once series rounding noise approaches that magnitude,
      // hand over to whichever branch carries the smaller honest error.
      double turn = std::max(2.0, 2.0 * std::sqrt(std::max(q, 0.0) + 1.0)) + 1.0;
      if (x > turn) {
        double mag = std::exp(-0.25 * x * x + q * std::log(x));
        if (s.noise > 0.25 * mag) {
          EvalResult a = pcf_asymptotic(q, x);
          if (a.est_abs_error < s.noise) return a;
        }
      }
      return {s.value, s.trunc};
    }
    return pcf_asymptotic(q, x);
  }

  // x < 0, non-integer order
  if (0.5 * x * x <= 600.0) {
    SeriesEval s = pcf_series(q, x);
    return {s.value, s.trunc};
  }
  return pcf_negative_connection(q, -x);
}

// d/dx D_Q(x) = (x/2) D_Q(x) - D_{Q+1}(x).
inline EvalResult pcf_d_prime(double q, double x) {
  EvalResult d0 = pcf_d(q, x);
  EvalResult d1 = pcf_d(q + 1.0, x);
  return {0.5 * x * d0.value - d1.value,
          0.5 * std::abs(x) * d0.est_abs_error + d1.est_abs_error};
}

// Even / odd solutions of Weber's equation about x = 0 (unit value resp.
// unit slope at the origin):
//   even: e^{-x^2/4} M(-Q/2, 1/2, x^2/2)
//   odd:  x e^{-x^2/4} M((1-Q)/2, 3/2, x^2/2)
// D_Q(x) + D_Q(-x) = 2 A(Q) * even and D_Q(x) - D_Q(-x) = 2 B(Q) * odd,
// where the prefactors A, B vanish identically at odd resp. even integer Q.
// Root-finding in Q against a wall at x = c therefore uses these components
// directly, which keeps only the genuine (non-trivial-eigenvector) zeros.
inline double weber_even_component(double q, double x) {
  using namespace detail;
  double z = 0.5 * x * x;
  return std::exp(-0.5 * z) * kummer(-0.5 * q, 0.5, z, 1e-15).sum;
}

inline double weber_odd_component(double q, double x) {
  using namespace detail;
  double z = 0.5 * x * x;
  return x * std::exp(-0.5 * z) * kummer(0.5 * (1.0 - q), 1.5, z, 1e-15).sum;
}

// Physicists' Hermite polynomial H_n(y) by the three-term recurrence.
inline double hermite_value(int n, double y) {
  if (n < 0 || n > 60)
    throw std::domain_error("hermite_value: n outside [0, 60]");
  double hm = 1.0;
  if (n == 0) return hm;
  double h = 2.0 * y;
  for (int k = 1; k < n; ++k) {
    double next = 2.0 * y * h - 2.0 * k * hm;
    hm = h;
    h = next;
  }
  return h;
}

// All n real roots of H_n, ascending: eigenvalues of the Jacobi matrix of
// the recurrence, polished by Newton steps and symmetrized about 0.
inline std::vector<double> hermite_roots(int n) {
  if (n < 1 || n > 60)
    throw std::domain_error("hermite_roots: n outside [1, 60]");
  std::vector<double> diag(n, 0.0), off(n > 1 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(0.5 * k);
  std::vector<double> roots = tridiag::lowest_eigenvalues(diag, off, n, 1e-13);
  for (double& y : roots) {
    for (int it = 0; it < 4; ++it) {
      double h = hermite_value(n, y);
      double hp = 2.0 * n * hermite_value(n - 1, y);
      if (hp == 0.0) break;
      y -= h / hp;
    }
  }
  std::sort(roots.begin(), roots.end());
  for (int i = 0; i < n / 2; ++i) {
    double s = 0.5 * (roots[n - 1 - i] - roots[i]);
    roots[i] = -s;
    roots[n - 1 - i] = s;
  }
  if (n % 2 == 1) roots[n / 2] = 0.0;
  return roots;
}

}  // namespace twindelta::specfun
