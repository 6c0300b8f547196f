#pragma once

// Independent validation of the analytic solver: direct finite-difference
// diagonalization of  -d^2/dx^2 + x^2/4 + g [delta(x+c) + delta(x-c)]  on a
// uniform grid with Dirichlet ends, plus the merged-delta (contact)
// reference for the c -> 0 limit.
//
// Each delta becomes a diagonal weight g/h at the nearest grid point, or
// split linearly over the two bracketing points (SplitWeight), giving two
// discretizations whose disagreement exposes scheme bias.  Discretization
// error is O(h) in the delta coupling and O(h^2) elsewhere; the certified
// error of an eigenvalue is its shift under halving h.

#include <cmath>
#include <vector>

#include "twindelta/contact.hpp"
#include "twindelta/errors.hpp"
#include "twindelta/model.hpp"
#include "twindelta/tridiag.hpp"

namespace twindelta::oracle {

enum class DeltaModel { NearestPoint, SplitWeight };

struct GridSpec {
  double L = 10.0;   // domain [-L, L]
  double h = 0.002;  // grid step; 2L/h must be integral
  DeltaModel delta_model = DeltaModel::NearestPoint;
};

struct OracleResult {
  std::vector<double> eigenvalues;
  std::vector<double> second_moments;
  GridSpec grid;
};

namespace detail {

inline void add_delta(std::vector<double>& diag, double strength, double xc,
                      double L, double h, DeltaModel model, long m) {
  // interior unknowns are x_i = -L + (i+1) h, i = 0 .. m-2
  if (model == DeltaModel::NearestPoint) {
    long j = std::lround((xc + L) / h);
    if (j >= 1 && j <= m - 1) diag[j - 1] += strength / h;
    return;
  }
  double t = (xc + L) / h;
  long j0 = static_cast<long>(std::floor(t));
  double frac = t - j0;
  if (j0 >= 1 && j0 <= m - 1) diag[j0 - 1] += (1.0 - frac) * strength / h;
  if (j0 + 1 >= 1 && j0 + 1 <= m - 1) diag[j0] += frac * strength / h;
}

}  // namespace detail

inline OracleResult grid_eigensolve(const ModelParams& p, const GridSpec& spec,
                                    int k) {
  if (k < 1 || k > 20)
    throw std::domain_error("grid_eigensolve: k outside [1, 20]");
  if (!(spec.L >= p.c + 8.0))
    throw std::domain_error("grid_eigensolve: L must be >= c + 8");
  if (!(spec.h > 0.0) || spec.h > 0.005)
    throw std::domain_error("grid_eigensolve: h must be in (0, 0.005]");
  double m_real = 2.0 * spec.L / spec.h;
  long m = std::lround(m_real);
  if (std::abs(m_real - m) > 1e-6)
    throw std::domain_error("grid_eigensolve: 2L/h must be integral");

  const double h = spec.h;
  const double inv_h2 = 1.0 / (h * h);
  std::vector<double> diag(m - 1), off(m - 2, -inv_h2);
  for (long i = 0; i < m - 1; ++i) {
    double x = -spec.L + (i + 1) * h;
    diag[i] = 2.0 * inv_h2 + 0.25 * x * x;
  }
  detail::add_delta(diag, p.g, -p.c, spec.L, h, spec.delta_model, m);
  detail::add_delta(diag, p.g, p.c, spec.L, h, spec.delta_model, m);

  OracleResult r;
  r.grid = spec;
  r.eigenvalues = tridiag::lowest_eigenvalues(diag, off, k, 1e-11);

  std::vector<std::vector<double>> cluster;
  for (int j = 0; j < k; ++j) {
    std::vector<std::vector<double>> deflate;
    for (int i = 0; i < j; ++i)
      if (std::abs(r.eigenvalues[j] - r.eigenvalues[i]) <
          1e-6 * std::max(1.0, std::abs(r.eigenvalues[j])))
        deflate.push_back(cluster[i]);
    auto v = tridiag::eigenvector(diag, off, r.eigenvalues[j], deflate);
    cluster.push_back(v);
    double x2 = 0.0;
    for (long i = 0; i < m - 1; ++i) {
      double x = -spec.L + (i + 1) * h;
      x2 += x * x * v[i] * v[i];
    }
    r.second_moments.push_back(x2);  // grid vectors are unit in l2, h cancels
  }
  return r;
}

struct CertifiedResult {
  OracleResult coarse;
  OracleResult fine;                  // same spec with h/2
  std::vector<double> certified_error;  // |eps_h - eps_{h/2}| per level
};

inline CertifiedResult grid_eigensolve_certified(const ModelParams& p,
                                                 const GridSpec& spec, int k) {
  CertifiedResult c;
  c.coarse = grid_eigensolve(p, spec, k);
  GridSpec half = spec;
  half.h = 0.5 * spec.h;
  c.fine = grid_eigensolve(p, half, k);
  for (int i = 0; i < k; ++i)
    c.certified_error.push_back(
        std::abs(c.coarse.eigenvalues[i] - c.fine.eigenvalues[i]));
  return c;
}

// Even-sector energies of the c -> 0 contact limit (merged strength 2g).
inline std::vector<double> contact_reference(double g, int count) {
  if (!std::isfinite(g))
    throw std::domain_error("contact_reference: g must be finite");
  auto qs = contact::even_q_roots(g, count);
  std::vector<double> eps;
  for (double q : qs) eps.push_back(q + 0.5);
  return eps;
}

}  // namespace twindelta::oracle
