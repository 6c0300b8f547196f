#pragma once

// Symmetric tridiagonal eigenvalue tools: Sturm-sequence bisection for the
// lowest eigenvalues and inverse iteration for the matching eigenvectors.

#include <cmath>
#include <cstdint>
#include <vector>

#include "twindelta/errors.hpp"

namespace twindelta::tridiag {

// Number of eigenvalues strictly below lambda (LDL^T sign count).
inline int count_below(const std::vector<double>& diag,
                       const std::vector<double>& off, double lambda) {
  const double tiny = 1e-300;
  int count = 0;
  double d = diag[0] - lambda;
  if (d < 0) ++count;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    double denom = (std::abs(d) < tiny) ? (d < 0 ? -tiny : tiny) : d;
    d = diag[i] - lambda - off[i - 1] * off[i - 1] / denom;
    if (d < 0) ++count;
  }
  return count;
}

// Lowest k eigenvalues, ascending, by bisection on the Sturm count.
inline std::vector<double> lowest_eigenvalues(const std::vector<double>& diag,
                                              const std::vector<double>& off,
                                              int k, double tol) {
  double lo = diag[0], hi = diag[0];
  for (std::size_t i = 0; i < diag.size(); ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(off[i - 1]);
    if (i + 1 < diag.size()) r += std::abs(off[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  std::vector<double> eig(k);
  for (int j = 0; j < k; ++j) {
    double a = lo, b = hi;
    for (int it = 0; it < 200 && b - a > tol * std::max(1.0, std::abs(a));
         ++it) {
      double m = 0.5 * (a + b);
      if (count_below(diag, off, m) > j)
        b = m;
      else
        a = m;
    }
    eig[j] = 0.5 * (a + b);
  }
  return eig;
}

namespace detail {

// Thomas solve of (T - sigma I) x = b in place.  Callers keep sigma a hair
// off the spectrum, so the unpivoted factorization stays bounded; tiny
// denominators are clamped as the usual inverse-iteration safeguard.
inline void shifted_solve(const std::vector<double>& diag,
                          const std::vector<double>& off, double sigma,
                          std::vector<double>& x) {
  const std::size_t n = diag.size();
  std::vector<double> dd(n);
  dd[0] = diag[0] - sigma;
  if (std::abs(dd[0]) < 1e-290) dd[0] = dd[0] < 0 ? -1e-290 : 1e-290;
  for (std::size_t i = 1; i < n; ++i) {
    double m = off[i - 1] / dd[i - 1];
    dd[i] = diag[i] - sigma - m * off[i - 1];
    x[i] -= m * x[i - 1];
    if (std::abs(dd[i]) < 1e-290) dd[i] = dd[i] < 0 ? -1e-290 : 1e-290;
  }
  x[n - 1] /= dd[n - 1];
  for (std::size_t i = n - 1; i-- > 0;)
    x[i] = (x[i] - off[i] * x[i + 1]) / dd[i];
}

}  // namespace detail

// Eigenvector for a converged eigenvalue by inverse iteration; previous
// vectors of a near-degenerate cluster are deflated out.
inline std::vector<double> eigenvector(
    const std::vector<double>& diag, const std::vector<double>& off,
    double lambda, const std::vector<std::vector<double>>& deflate) {
  const std::size_t n = diag.size();
  std::vector<double> v(n);
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (std::size_t i = 0; i < n; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    v[i] = 0.5 + (state >> 40) * 0x1p-24;
  }
  double sigma = lambda + 1e-10 * std::max(1.0, std::abs(lambda));
  auto orth = [&]() {
    for (const auto& w : deflate) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += v[i] * w[i];
      for (std::size_t i = 0; i < n; ++i) v[i] -= dot * w[i];
    }
  };
  for (int it = 0; it < 4; ++it) {
    orth();
    detail::shifted_solve(diag, off, sigma, v);
    orth();
    double norm = 0.0;
    for (double a : v) norm += a * a;
    norm = std::sqrt(norm);
    if (!(norm > 0.0) || !std::isfinite(norm))
      throw convergence_error("tridiag::eigenvector: inverse iteration failed");
    for (double& a : v) a /= norm;
  }
  return v;
}

}  // namespace twindelta::tridiag
