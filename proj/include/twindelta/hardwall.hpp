#pragma once

// g = +inf spectrum: the interaction centers act as hard walls splitting the
// line into regions I = (-inf,-c), II = (-c,c), III = (c,inf).
//
//   inside  (region II):  even levels solve D_Q(c) + D_Q(-c) = 0,
//                         odd  levels solve D_Q(c) - D_Q(-c) = 0
//                         (parity factorization of the determinant condition)
//   outside (I and III):  D_Q(c) = 0, each root doubly degenerate with
//                         symmetrized partners n = 2 nu and n = 2 nu + 1.
//
// Inside and outside levels coincide exactly at dark displacements
// c* = sqrt(2) * (root of H_n), producing triple degeneracies.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "twindelta/model.hpp"
#include "twindelta/rootscan.hpp"
#include "twindelta/specfun.hpp"

namespace twindelta::hardwall {

enum class HardwallKind { Inside, Outside };

struct HardwallLevel {
  HardwallKind kind = HardwallKind::Inside;
  Parity parity = Parity::Even;  // Outside pairs carry one even + one odd partner
  int index = 0;                 // nu for Outside, per-parity sequence for Inside
  double epsilon = 0.0;
  int multiplicity = 1;
};

struct HardwallOptions {
  double q_max = 150.0;  // inside levels above this (tiny c) are out of reach
  double dq = 0.01;
  double bisect_tol = 1e-10;
  double degeneracy_tol = 1e-8;
};

// Lowest `count` hard-wall levels supported on (-c, c).  For small c the
// box energy may exceed the order window; only in-window levels return.
inline std::vector<HardwallLevel> inside_levels(double c, Parity parity,
                                                int count,
                                                HardwallOptions opt = {}) {
  if (!(c > 0.0)) throw std::domain_error("inside_levels: requires c > 0");
  if (count < 1 || count > 40)
    throw std::domain_error("inside_levels: count outside [1, 40]");
  auto f = [c, parity](double q) {
    return parity == Parity::Even ? specfun::weber_even_component(q, c)
                                  : specfun::weber_odd_component(q, c);
  };
  auto qs =
      rootscan::scan_roots(f, -0.49, opt.q_max, opt.dq, opt.bisect_tol, count);
  std::vector<HardwallLevel> out;
  for (std::size_t k = 0; k < qs.size(); ++k)
    out.push_back({HardwallKind::Inside, parity, static_cast<int>(k),
                   qs[k] + 0.5, 1});
  return out;
}

// Lowest `count` distinct levels supported outside (-c, c), multiplicity 2.
inline std::vector<HardwallLevel> outside_levels(double c, int count,
                                                 HardwallOptions opt = {}) {
  if (!(c >= 0.0)) throw std::domain_error("outside_levels: requires c >= 0");
  if (count < 1 || count > 40)
    throw std::domain_error("outside_levels: count outside [1, 40]");
  auto f = [c](double q) { return specfun::pcf_d(q, c).value; };
  auto qs =
      rootscan::scan_roots(f, -0.49, opt.q_max, opt.dq, opt.bisect_tol, count);
  std::vector<HardwallLevel> out;
  for (std::size_t k = 0; k < qs.size(); ++k)
    out.push_back({HardwallKind::Outside, Parity::Even, static_cast<int>(k),
                   qs[k] + 0.5, 2});
  return out;
}

// Symmetrized partner labels of an outside pair: n = 2 nu and 2 nu + 1.
inline std::pair<int, int> outside_partner_labels(int nu) {
  return {2 * nu, 2 * nu + 1};
}

struct DarkPoint {
  int n = 0;
  double c_star = 0.0;
  Parity parity = Parity::Even;
};

// All (n, c*) with n <= n_max, 0 < c* <= c_max, ascending in c*.
inline std::vector<DarkPoint> dark_points(int n_max, double c_max) {
  if (n_max < 1 || n_max > 40)
    throw std::domain_error("dark_points: n_max outside [1, 40]");
  std::vector<DarkPoint> pts;
  for (int n = 1; n <= n_max; ++n)
    for (double y : specfun::hermite_roots(n)) {
      if (y <= 1e-12) continue;
      double c = std::sqrt(2.0) * y;
      if (c <= c_max) pts.push_back({n, c, parity_of(n)});
    }
  std::sort(pts.begin(), pts.end(), [](const DarkPoint& a, const DarkPoint& b) {
    return a.c_star != b.c_star ? a.c_star < b.c_star : a.n < b.n;
  });
  return pts;
}

struct MergedLevel {
  HardwallLevel level;
  bool triple = false;  // inside level coincides with an outside pair
};

// Union of inside and outside levels sorted by energy; coincidences within
// degeneracy_tol are flagged (they occur exactly at dark displacements).
inline std::vector<MergedLevel> merged_spectrum(double c, int count,
                                                HardwallOptions opt = {}) {
  if (count < 1 || count > 60)
    throw std::domain_error("merged_spectrum: count outside [1, 60]");
  int per = std::min(count, 40);
  std::vector<HardwallLevel> all;
  for (auto& l : inside_levels(c, Parity::Even, per, opt)) all.push_back(l);
  for (auto& l : inside_levels(c, Parity::Odd, per, opt)) all.push_back(l);
  for (auto& l : outside_levels(c, per, opt)) all.push_back(l);
  std::sort(all.begin(), all.end(),
            [](const HardwallLevel& a, const HardwallLevel& b) {
              return a.epsilon < b.epsilon;
            });
  if (static_cast<int>(all.size()) > count) all.resize(count);
  std::vector<MergedLevel> out;
  for (auto& l : all) out.push_back({l, false});
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[j].level.epsilon - out[i].level.epsilon > opt.degeneracy_tol)
        break;
      if (out[i].level.kind != out[j].level.kind)
        out[i].triple = out[j].triple = true;
    }
  return out;
}

enum class Regime { Exclusion, Crossover, Truncation };

inline std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Exclusion: return "E";
    case Regime::Crossover: return "C";
    default: return "T";
  }
}

// Regime from the ordering of the lowest inside levels against the two
// lowest outside pairs: exclusion while no inside level undercuts the
// second outside pair, truncation once the two lowest inside levels both
// sit below the lowest outside pair.
inline Regime classify_regime(double c, HardwallOptions opt = {}) {
  if (!(c > 0.0)) throw std::domain_error("classify_regime: requires c > 0");
  const double inf = std::numeric_limits<double>::infinity();
  auto in_e = inside_levels(c, Parity::Even, 1, opt);
  auto in_o = inside_levels(c, Parity::Odd, 1, opt);
  auto outs = outside_levels(c, 2, opt);
  double in0 = in_e.empty() ? inf : in_e[0].epsilon;
  double in1 = in_o.empty() ? inf : in_o[0].epsilon;
  double out0 = outs.size() > 0 ? outs[0].epsilon : inf;
  double out1 = outs.size() > 1 ? outs[1].epsilon : inf;
  if (in0 > out1) return Regime::Exclusion;
  if (in1 < out0) return Regime::Truncation;
  return Regime::Crossover;
}

}  // namespace twindelta::hardwall
