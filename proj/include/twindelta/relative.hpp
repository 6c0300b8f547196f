#pragma once

// Finite-g solver for the relative sub-Hamiltonian
//   -d^2/dx^2 + x^2/4 + g [delta(x+c) + delta(x-c)].
//
// Energies eps = Q + 1/2 are roots of the transcendental
//   F(Q) = [D_Q(c) D_{Q+1}(-c) + D_Q(-c) D_{Q+1}(c)]
//          / [D_Q(-c) + (-1)^n D_Q(c)]  +  g D_Q(c) = 0
// in the given parity sector.  F has genuine poles at the zeros of its
// denominator (the g = +inf spectrum of the inner region), removable 0/0
// points at wrong-parity integers, and degenerates to 0 = 0 at dark
// displacements, where the non-interacting level is inserted analytically.
//
// Bracketing walks a Q grid, locates denominator zeros first, splits the
// grid there, and only then reads F sign changes, so roots hugging a pole
// at large g are not lost.  A deep |F| dip without a sign change triggers
// a fine rescan to catch root pairs inside one grid cell (avoided
// crossings near dark displacements).

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "twindelta/contact.hpp"
#include "twindelta/errors.hpp"
#include "twindelta/model.hpp"
#include "twindelta/quadrature.hpp"
#include "twindelta/rootscan.hpp"
#include "twindelta/specfun.hpp"

namespace twindelta::rel {

struct SpectralValue {
  double value = 0.0;
  bool near_pole = false;
};

namespace detail {

struct SpecEval {
  double q = 0.0;
  double f = 0.0;
  double num = 0.0;
  double delta = 0.0;
  double dqc = 0.0;
  bool near_pole = false;
  bool dark_hole = false;  // D_Q(+-c) both vanish: dark configuration
};

inline SpecEval eval_spectral(double q, const ModelParams& p, Parity parity,
                              double pole_tol) {
  SpecEval e;
  e.q = q;
  const int s = parity_sign(parity);
  const double dqc = specfun::pcf_d(q, p.c).value;
  const double dqmc = specfun::pcf_d(q, -p.c).value;
  const double d1c = specfun::pcf_d(q + 1.0, p.c).value;
  const double d1mc = specfun::pcf_d(q + 1.0, -p.c).value;
  e.dqc = dqc;
  e.delta = dqmc + s * dqc;
  e.num = dqc * d1mc + dqmc * d1c;
  const double scale_d = std::max(std::abs(dqc), std::abs(dqmc));
  const double scale_1 =
      std::max({std::abs(d1c), std::abs(d1mc), 1e-300});
  if (scale_d <= 1e-11 * scale_1) {
    e.dark_hole = true;
    e.f = 0.0;
    return e;
  }
  // |num/delta| far above its natural scale marks a denominator zero
  e.near_pole =
      std::abs(e.num) * pole_tol >= std::abs(e.delta) * scale_1;
  e.f = e.num / e.delta + p.g * dqc;
  return e;
}

// Registry of dark displacements: c* = sqrt(2) * (positive root of H_n).
// The root table is built once up front so concurrent solves only read it.
inline bool is_dark_displacement(int n, double c, double tol) {
  if (n < 1 || n > 60 || c <= 0.0) return false;
  static const std::vector<std::vector<double>> table = [] {
    std::vector<std::vector<double>> t(61);
    for (int k = 1; k <= 60; ++k) t[k] = specfun::hermite_roots(k);
    return t;
  }();
  for (double y : table[n]) {
    if (y <= 0.0) continue;
    if (std::abs(c - std::sqrt(2.0) * y) <= tol) return true;
  }
  return false;
}

// Pole-aware scan of F over [lo, hi].  `enough` is consulted after each
// grid cell so the walk can stop once the caller has what it needs.
template <typename EnoughFn>
inline std::vector<double> scan_spectral_roots(const ModelParams& p,
                                               Parity parity,
                                               const SolveOptions& opt,
                                               double lo, double hi,
                                               const EnoughFn& enough) {
  std::vector<double> roots;
  auto eval = [&](double q) { return eval_spectral(q, p, parity, opt.pole_tol); };
  auto fval = [&](double q) { return eval(q).f; };

  // Bisected candidates are re-validated: a point inside a dark 0/0 hole or
  // hugging a genuine pole is an artifact, not an eigenvalue.
  auto refine_root = [&](double a, double b, double fa) {
    double r = rootscan::bisect(fval, a, b, fa, opt.bisect_tol);
    SpecEval at = eval(r);
    if (!at.dark_hole && !at.near_pole) roots.push_back(r);
  };

  // Sign change of F between two pole-free points -> root; a deep dip of
  // |F| without a sign change -> fine rescan for a root pair.  Dark-hole
  // evaluations carry no sign information and never open a bracket.
  auto handle_segment = [&](const SpecEval& a, const SpecEval& b) {
    if (a.dark_hole || b.dark_hole) return;
    if (std::isfinite(a.f) && std::isfinite(b.f) && (a.f < 0) != (b.f < 0)) {
      refine_root(a.q, b.q, a.f);
      return;
    }
    if (!std::isfinite(a.f) || !std::isfinite(b.f)) return;
    if (a.near_pole || b.near_pole) return;
    double gap = b.q - a.q;
    if (gap < 64.0 * opt.bisect_tol) return;
    SpecEval mid = eval(0.5 * (a.q + b.q));
    if (mid.dark_hole) return;
    if ((mid.f < 0) != (a.f < 0)) {  // missed pair straddling the midpoint
      refine_root(a.q, mid.q, a.f);
      refine_root(mid.q, b.q, mid.f);
      return;
    }
    if (std::abs(mid.f) < 0.04 * std::min(std::abs(a.f), std::abs(b.f))) {
      double step = gap / 64.0;
      double qa = a.q, fa = a.f;
      for (int i = 1; i <= 64; ++i) {
        double qb = a.q + i * step;
        SpecEval fb = eval(qb);
        if (fb.dark_hole) {
          qa = qb;
          continue;
        }
        if ((fa < 0) != (fb.f < 0)) refine_root(qa, qb, fa);
        qa = qb;
        fa = fb.f;
      }
    }
  };

  SpecEval prev = eval(lo);
  double q = lo;
  while (q < hi && !enough(roots, q)) {
    double qn = std::min(q + opt.dq, hi);
    SpecEval cur = eval(qn);

    bool delta_flip = (prev.delta < 0) != (cur.delta < 0);
    if (delta_flip) {
      // Locate the denominator zero.  It is removable exactly when the
      // numerator vanishes at the same point (wrong-parity integers, dark
      // configurations); the numerator zero is located independently since
      // near the truncation regime a genuine pole can sit within 1e-7 of
      // an integer where the numerator also crosses.
      auto dval = [&](double qq) { return eval(qq).delta; };
      double tol_z = 1e-13 * std::max(1.0, std::abs(qn));
      double pz = rootscan::bisect(dval, prev.q, qn, prev.delta, tol_z);
      bool removable = false;
      if ((prev.num < 0) != (cur.num < 0)) {
        auto nval = [&](double qq) { return eval(qq).num; };
        double nz = rootscan::bisect(nval, prev.q, qn, prev.num, tol_z);
        removable = std::abs(pz - nz) <= 1e-9 * (1.0 + std::abs(pz));
      }
      if (!removable) {
        double d = std::max(1e-11, 1e-13 * std::abs(pz));
        if (pz - d > prev.q) handle_segment(prev, eval(pz - d));
        if (pz + d < qn) handle_segment(eval(pz + d), cur);
        prev = cur;
        q = qn;
        continue;
      }
    }
    handle_segment(prev, cur);
    prev = cur;
    q = qn;
  }
  return roots;
}

}  // namespace detail

// F(Q) of the spectral equation, with the near-pole flag.  At a dark
// configuration (both D_Q(+-c) zero) the equation is identically satisfied
// and the value 0 is returned rather than the 0/0 ratio.
inline SpectralValue spectral_function(double q, const ModelParams& p,
                                       Parity parity,
                                       double pole_tol = 1e-8) {
  if (!(p.c > 0.0))
    throw std::domain_error("spectral_function: requires c > 0");
  detail::SpecEval e = detail::eval_spectral(q, p, parity, pole_tol);
  return {e.f, e.near_pole};
}

struct PiecewiseWavefunction {
  EnergyLevel level;
  ModelParams params;
  double beta = 1.0;       // normalization amplitude, > 0
  double mid_coef = 0.5;   // region II multiplier; exactly 1/2 for dark levels
  double half_width = 12.0;  // support window [-L, L], L = c + 12
};

namespace detail {

inline double evaluate_unit(const PiecewiseWavefunction& w, double x) {
  const double c = w.params.c;
  const double q = w.level.q;
  const int s = parity_sign(w.level.parity);
  if (x < -c) return specfun::pcf_d(q, -x).value;
  if (x > c) return s * specfun::pcf_d(q, x).value;
  return w.mid_coef *
         (specfun::pcf_d(q, x).value + s * specfun::pcf_d(q, -x).value);
}

}  // namespace detail

inline double evaluate_wavefunction(const PiecewiseWavefunction& w, double x) {
  if (!(std::abs(x) <= 60.0))
    throw std::domain_error("evaluate_wavefunction: |x| too large");
  return w.beta * detail::evaluate_unit(w, x);
}

inline PiecewiseWavefunction build_wavefunction(const EnergyLevel& level,
                                                const ModelParams& p,
                                                double quad_tol = 1e-10) {
  PiecewiseWavefunction w;
  w.level = level;
  w.params = p;
  w.half_width = p.c + 12.0;
  if (level.kind == LevelKind::Dark) {
    w.level.q = static_cast<double>(level.n);  // phi^0_n exactly
    w.mid_coef = 0.5;
  } else if (p.c > 0.0 && p.g != 0.0) {
    const int s = parity_sign(level.parity);
    double dqc = specfun::pcf_d(level.q, p.c).value;
    double dqmc = specfun::pcf_d(level.q, -p.c).value;
    w.mid_coef = dqc / (dqmc + s * dqc);
  } else {
    w.mid_coef = 0.5;  // g = 0 or merged-delta: phi = beta D_Q(|x|) up to parity
  }
  auto f2 = [&](double t) {
    double v = detail::evaluate_unit(w, t);
    return v * v;
  };
  std::vector<double> pts =
      p.c > 0.0 ? std::vector<double>{0.0, p.c, w.half_width}
                : std::vector<double>{0.0, w.half_width};
  double norm2;
  try {
    norm2 = 2.0 * quadrature::integrate_panels(f2, pts, quad_tol);
  } catch (const convergence_error& e) {
    throw normalization_error(std::string("build_wavefunction: ") + e.what());
  }
  if (!(norm2 > 0.0) || !std::isfinite(norm2))
    throw normalization_error("build_wavefunction: non-finite norm");
  w.beta = 1.0 / std::sqrt(norm2);
  return w;
}

// <x^2> of a normalized wavefunction.
inline double width(const PiecewiseWavefunction& w, double quad_tol = 1e-8) {
  auto f = [&](double t) {
    double v = detail::evaluate_unit(w, t);
    return t * t * v * v;
  };
  std::vector<double> pts =
      w.params.c > 0.0
          ? std::vector<double>{0.0, w.params.c, w.half_width}
          : std::vector<double>{0.0, w.half_width};
  return 2.0 * w.beta * w.beta * quadrature::integrate_panels(f, pts, quad_tol);
}

// Strict sign changes of phi on a sampling grid, ignoring grazing values.
inline int node_count(const PiecewiseWavefunction& w) {
  const double c = w.params.c;
  double h = c > 0.0 ? std::min(0.01, c / 20.0) : 0.01;
  const double L = w.half_width;
  int nodes = 0;
  double last_sign = 0.0;
  for (double x = -L; x <= L + 0.5 * h; x += h) {
    double v = evaluate_wavefunction(w, std::min(x, L));
    if (std::abs(v) < 1e-9) continue;
    double s = v > 0 ? 1.0 : -1.0;
    if (last_sign != 0.0 && s != last_sign) ++nodes;
    last_sign = s;
  }
  return nodes;
}

struct BoundaryResiduals {
  double cont_minus = 0.0;
  double cont_plus = 0.0;
  double jump_minus = 0.0;
  double jump_plus = 0.0;
};

// Continuity and derivative-jump residuals at x = -+c from analytic
// derivatives; all four are <= 1e-6 for a correctly solved level.
inline BoundaryResiduals boundary_residuals(const PiecewiseWavefunction& w,
                                            const ModelParams& p) {
  const double c = p.c;
  const double q = w.level.q;
  const int s = parity_sign(w.level.parity);
  const double b = w.beta;
  const double m = w.mid_coef;

  auto d = [&](double qq, double x) { return specfun::pcf_d(qq, x).value; };
  // d/dx D_q(+-x) = (x/2) D_q(+-x) -+ D_{q+1}(+-x)
  auto dpos = [&](double x) { return 0.5 * x * d(q, x) - d(q + 1.0, x); };
  auto dneg = [&](double x) { return 0.5 * x * d(q, -x) + d(q + 1.0, -x); };

  double phi1 = b * d(q, c);             // region I at x = -c  (D_q(-x))
  double phi1p = b * dneg(-c);
  double phi3 = s * b * d(q, c);         // region III at x = +c
  double phi3p = s * b * dpos(c);
  double phi2m = b * m * (d(q, -c) + s * d(q, c));   // region II at -c
  double phi2p = b * m * (d(q, c) + s * d(q, -c));   // region II at +c
  double phi2mp = b * m * (dpos(-c) + s * dneg(-c));
  double phi2pp = b * m * (dpos(c) + s * dneg(c));

  BoundaryResiduals r;
  r.cont_minus = std::abs(phi2m - phi1);
  r.cont_plus = std::abs(phi2p - phi3);
  r.jump_minus = std::abs((phi2mp - phi1p) - p.g * phi1);
  r.jump_plus = std::abs((phi3p - phi2pp) - p.g * phi3);
  return r;
}

// Lowest `count` levels of one parity sector, ascending.
inline std::vector<EnergyLevel> solve_levels(const ModelParams& p,
                                             Parity parity, int count,
                                             SolveOptions opt = {}) {
  if (count < 1 || count > 40)
    throw std::domain_error("solve_levels: count outside [1, 40]");
  if (!(p.c >= 0.0) || !std::isfinite(p.g))
    throw std::domain_error("solve_levels: invalid parameters");

  const int base = parity == Parity::Even ? 0 : 1;
  std::vector<EnergyLevel> out;

  auto trivial_level = [&](int k) {
    int n = base + 2 * k;
    LevelKind kind = detail::is_dark_displacement(n, p.c, opt.dark_tol)
                         ? LevelKind::Dark
                         : LevelKind::Regular;
    return EnergyLevel{n, parity, n + 0.5, static_cast<double>(n), kind};
  };

  if (p.g == 0.0 || (p.c == 0.0 && parity == Parity::Odd)) {
    for (int k = 0; k < count; ++k) out.push_back(trivial_level(k));
    return out;
  }

  if (p.c == 0.0) {  // merged delta of strength 2g at the origin, even sector
    auto qs = contact::even_q_roots(p.g, count, opt.q_min, opt.q_max, opt.dq,
                                    opt.bisect_tol);
    for (int k = 0; k < count; ++k)
      out.push_back(EnergyLevel{base + 2 * k, parity, qs[k] + 0.5, qs[k],
                                LevelKind::Regular});
    return out;
  }

  // Dark levels of this parity inside the scan window.
  std::vector<double> dark_qs;
  int n_cap = static_cast<int>(std::floor(opt.q_max));
  for (int n = base == 0 ? 2 : 1; n <= std::min(n_cap, 60); n += 2)
    if (detail::is_dark_displacement(n, p.c, opt.dark_tol))
      dark_qs.push_back(static_cast<double>(n));

  // Attractive couplings are bounded below by the merged-delta well of
  // strength 2|g|: eps >= -g^2, so the scan need not start deeper.
  double lo = p.g >= 0.0 ? -0.75
                         : std::max(opt.q_min, -p.g * p.g - 1.5);
  auto enough = [&](const std::vector<double>& roots, double q_now) {
    int darks_below = static_cast<int>(
        std::count_if(dark_qs.begin(), dark_qs.end(),
                      [q_now](double dq_) { return dq_ < q_now - 1.0; }));
    return static_cast<int>(roots.size()) + darks_below > count;
  };
  std::vector<double> roots =
      detail::scan_spectral_roots(p, parity, opt, lo, opt.q_max, enough);

  // Merge scanned roots with exactly inserted dark levels.
  std::vector<std::pair<double, LevelKind>> merged;
  for (double q : roots) {
    bool near_dark =
        std::any_of(dark_qs.begin(), dark_qs.end(),
                    [q](double dq_) { return std::abs(q - dq_) < 1e-7; });
    if (!near_dark) merged.push_back({q, LevelKind::Regular});
  }
  for (double q : dark_qs) merged.push_back({q, LevelKind::Dark});
  std::sort(merged.begin(), merged.end());

  if (static_cast<int>(merged.size()) < count)
    throw range_exhausted_error(
        "solve_levels: found " + std::to_string(merged.size()) + " of " +
        std::to_string(count) + " requested levels in the Q window");

  for (int k = 0; k < count; ++k) {
    int n = base + 2 * k;
    auto [q, kind] = merged[k];
    if (kind == LevelKind::Dark && std::abs(q - n) > 0.5)
      throw labeling_error("solve_levels: dark level landed at wrong index");
    double eps = kind == LevelKind::Dark ? n + 0.5 : q + 0.5;
    out.push_back(EnergyLevel{n, parity, eps, kind == LevelKind::Dark
                                                   ? static_cast<double>(n)
                                                   : q,
                              kind});
  }

  if (opt.validate_nodes) {
    for (const auto& lvl : out) {
      auto w = build_wavefunction(lvl, p);
      int nodes = node_count(w);
      if (nodes != lvl.n)
        throw labeling_error("solve_levels: node count " +
                             std::to_string(nodes) + " for label n=" +
                             std::to_string(lvl.n));
    }
  }
  return out;
}

// Both sectors merged by energy.
inline std::vector<EnergyLevel> solve_levels_both(const ModelParams& p,
                                                  int count,
                                                  SolveOptions opt = {}) {
  int per = count / 2 + 1;
  auto ev = solve_levels(p, Parity::Even, per, opt);
  auto od = solve_levels(p, Parity::Odd, per, opt);
  std::vector<EnergyLevel> all;
  all.insert(all.end(), ev.begin(), ev.end());
  all.insert(all.end(), od.begin(), od.end());
  std::sort(all.begin(), all.end(),
            [](const EnergyLevel& a, const EnergyLevel& b) {
              return a.epsilon < b.epsilon;
            });
  all.resize(count);
  return all;
}

}  // namespace twindelta::rel
