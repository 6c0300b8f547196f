#pragma once

// Parameter-sweep engine with level continuation: the tabulated curves
// behind the energy-vs-g, energy-vs-c, width, and g = inf figures.
//
// Curves are identified by the node-count label (n, parity), which is
// stable along a sweep because same-parity levels never cross at finite g.
// Each sample is seeded from its predecessor (bracket around the previous
// Q +- 5 grid steps); the seeded result must reproduce an unseeded solve,
// so any inconsistency falls back to a full scan of that sample.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "twindelta/hardwall.hpp"
#include "twindelta/model.hpp"
#include "twindelta/relative.hpp"

namespace twindelta::scan {

enum class Axis { G, C };

struct ScanResult {
  Axis axis = Axis::G;
  std::vector<double> samples;
  std::vector<std::string> curve_labels;
  std::vector<std::vector<double>> values;  // [sample][curve]
  std::vector<std::vector<std::string>> tags;  // optional per-cell tags
  std::vector<std::string> sample_tags;        // regime letter per sample
  std::vector<std::pair<std::string, std::string>> metadata;
};

// Figure-default grids: g in [-2, 20], 65 points refined near 0;
// c in [0.05, 4], 160 uniform points.
inline std::vector<double> default_g_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 16; ++i) g.push_back(-2.0 + 0.125 * i);
  for (int i = 1; i <= 16; ++i) g.push_back(0.125 * i);
  for (int i = 1; i <= 32; ++i) g.push_back(2.0 + 0.5625 * i);
  return g;
}

inline std::vector<double> default_c_grid() {
  std::vector<double> c(160);
  for (int i = 0; i < 160; ++i) c[i] = 0.05 + (4.0 - 0.05) * i / 159.0;
  return c;
}

namespace detail {

inline std::string level_label(int n, Parity p) {
  return "n" + std::to_string(n) + "_" + parity_name(p);
}

// Levels n = 0 .. n_levels-1 at one parameter point, by label.
inline std::vector<EnergyLevel> levels_by_label(const ModelParams& p,
                                                int n_levels,
                                                const SolveOptions& opt) {
  int n_even = (n_levels + 1) / 2;
  int n_odd = n_levels / 2;
  auto ev = rel::solve_levels(p, Parity::Even, n_even, opt);
  std::vector<EnergyLevel> out;
  std::vector<EnergyLevel> od;
  if (n_odd > 0) od = rel::solve_levels(p, Parity::Odd, n_odd, opt);
  for (int n = 0; n < n_levels; ++n)
    out.push_back(n % 2 == 0 ? ev[n / 2] : od[n / 2]);
  return out;
}

// Seeded re-solve of one parity sector from the previous sample's orders.
// Returns empty on any inconsistency; caller falls back to a full solve.
inline std::vector<EnergyLevel> seeded_sector(const ModelParams& p,
                                              Parity parity,
                                              const std::vector<double>& prev_q,
                                              const SolveOptions& opt) {
  std::vector<EnergyLevel> out;
  const int base = parity == Parity::Even ? 0 : 1;
  std::vector<double> qs;
  for (double q0 : prev_q) {
    int n = base + 2 * static_cast<int>(qs.size());
    if (rel::detail::is_dark_displacement(n, p.c, opt.dark_tol)) {
      qs.push_back(static_cast<double>(n));
      continue;
    }
    SolveOptions w = opt;
    w.dq = opt.dq / 5.0;
    double lo = q0 - 5.0 * opt.dq;
    double hi = q0 + 5.0 * opt.dq;
    auto enough = [](const std::vector<double>&, double) { return false; };
    auto roots = rel::detail::scan_spectral_roots(p, parity, w, lo, hi, enough);
    // drop roots that really belong to a dark insertion
    roots.erase(std::remove_if(roots.begin(), roots.end(),
                               [&](double q) {
                                 int m = static_cast<int>(std::round(q));
                                 return std::abs(q - m) < 1e-7 &&
                                        rel::detail::is_dark_displacement(
                                            m, p.c, opt.dark_tol);
                               }),
                roots.end());
    if (roots.empty()) return {};
    // root nearest the seed
    double best = roots[0];
    for (double r : roots)
      if (std::abs(r - q0) < std::abs(best - q0)) best = r;
    qs.push_back(best);
  }
  for (std::size_t k = 0; k + 1 < qs.size(); ++k)
    if (!(qs[k + 1] - qs[k] > 1e-9)) return {};  // collided or out of order
  for (std::size_t k = 0; k < qs.size(); ++k) {
    int n = base + 2 * static_cast<int>(k);
    bool dark = rel::detail::is_dark_displacement(n, p.c, opt.dark_tol);
    double q = dark ? static_cast<double>(n) : qs[k];
    out.push_back(EnergyLevel{n, parity, q + 0.5, q,
                              dark ? LevelKind::Dark : LevelKind::Regular});
    if (dark) out.back().epsilon = n + 0.5;
  }
  return out;
}

inline std::vector<EnergyLevel> continued_levels(
    const ModelParams& p, int n_levels, const SolveOptions& opt,
    const std::vector<EnergyLevel>& prev) {
  std::vector<double> prev_even, prev_odd;
  for (const auto& l : prev)
    (l.parity == Parity::Even ? prev_even : prev_odd).push_back(l.q);
  auto ev = seeded_sector(p, Parity::Even, prev_even, opt);
  auto od = seeded_sector(p, Parity::Odd, prev_odd, opt);
  if (ev.size() != prev_even.size() || od.size() != prev_odd.size())
    return levels_by_label(p, n_levels, opt);
  std::vector<EnergyLevel> out;
  for (int n = 0; n < n_levels; ++n)
    out.push_back(n % 2 == 0 ? ev[n / 2] : od[n / 2]);
  return out;
}

inline void push_common_metadata(ScanResult& r, const SolveOptions& opt) {
  r.metadata.emplace_back("solver_version", "1.0.0");
  r.metadata.emplace_back("dq", std::to_string(opt.dq));
  r.metadata.emplace_back("bisect_tol", std::to_string(opt.bisect_tol));
  r.metadata.emplace_back("dark_tol", std::to_string(opt.dark_tol));
}

}  // namespace detail

// Energy curves over ascending g at fixed c.
inline ScanResult sweep_g(double c, const std::vector<double>& g_samples,
                          int n_levels, SolveOptions opt = {}) {
  if (g_samples.size() < 2 || !std::is_sorted(g_samples.begin(), g_samples.end()))
    throw std::domain_error("sweep_g: need >= 2 ascending samples");
  ScanResult r;
  r.axis = Axis::G;
  r.samples = g_samples;
  for (int n = 0; n < n_levels; ++n)
    r.curve_labels.push_back(detail::level_label(n, parity_of(n)));
  std::vector<EnergyLevel> prev;
  for (double g : g_samples) {
    ModelParams p{g, c};
    std::vector<EnergyLevel> lv =
        prev.empty() ? detail::levels_by_label(p, n_levels, opt)
                     : detail::continued_levels(p, n_levels, opt, prev);
    std::vector<double> row;
    for (const auto& l : lv) row.push_back(l.epsilon);
    r.values.push_back(row);
    prev = lv;
  }
  r.metadata.emplace_back("axis", "g");
  r.metadata.emplace_back("c", std::to_string(c));
  detail::push_common_metadata(r, opt);
  return r;
}

// Energy curves over ascending c > 0 at fixed g, with the non-interacting
// endpoint references recorded in the metadata.
inline ScanResult sweep_c(double g, const std::vector<double>& c_samples,
                          int n_levels, SolveOptions opt = {}) {
  if (c_samples.size() < 2 ||
      !std::is_sorted(c_samples.begin(), c_samples.end()) ||
      !(c_samples.front() > 0.0))
    throw std::domain_error("sweep_c: need >= 2 ascending samples, min > 0");
  ScanResult r;
  r.axis = Axis::C;
  r.samples = c_samples;
  for (int n = 0; n < n_levels; ++n)
    r.curve_labels.push_back(detail::level_label(n, parity_of(n)));
  std::vector<EnergyLevel> prev;
  for (double c : c_samples) {
    ModelParams p{g, c};
    std::vector<EnergyLevel> lv =
        prev.empty() ? detail::levels_by_label(p, n_levels, opt)
                     : detail::continued_levels(p, n_levels, opt, prev);
    std::vector<double> row;
    for (const auto& l : lv) row.push_back(l.epsilon);
    r.values.push_back(row);
    prev = lv;
  }
  r.metadata.emplace_back("axis", "c");
  r.metadata.emplace_back("g", std::to_string(g));
  // fermionized levels mark the c -> 0 edge, free levels the large-c edge
  std::string fermi, free;
  for (int n = 0; n < n_levels; ++n) {
    fermi += (n ? "," : "") + std::to_string(2 * (n / 2) + 1) + ".5";
    free += (n ? "," : "") + std::to_string(n) + ".5";
  }
  r.metadata.emplace_back("c_to_0_fermionic_levels", fermi);
  r.metadata.emplace_back("large_c_noninteracting_levels", free);
  detail::push_common_metadata(r, opt);
  return r;
}

// <x_n^2> curves over c for the requested levels (default n = 0, 1, 2).
inline ScanResult sweep_widths(double g, const std::vector<double>& c_samples,
                               std::vector<int> level_ns = {0, 1, 2},
                               SolveOptions opt = {}) {
  if (c_samples.empty() || !(c_samples.front() > 0.0))
    throw std::domain_error("sweep_widths: need ascending samples, min > 0");
  ScanResult r;
  r.axis = Axis::C;
  r.samples = c_samples;
  int n_levels = *std::max_element(level_ns.begin(), level_ns.end()) + 1;
  for (int n : level_ns)
    r.curve_labels.push_back("x2_" + detail::level_label(n, parity_of(n)));
  std::vector<EnergyLevel> prev;
  for (double c : c_samples) {
    ModelParams p{g, c};
    std::vector<EnergyLevel> lv =
        prev.empty() ? detail::levels_by_label(p, n_levels, opt)
                     : detail::continued_levels(p, n_levels, opt, prev);
    std::vector<double> row;
    for (int n : level_ns) {
      auto w = rel::build_wavefunction(lv[n], p);
      row.push_back(rel::width(w));
    }
    r.values.push_back(row);
    prev = lv;
  }
  r.metadata.emplace_back("axis", "c");
  r.metadata.emplace_back("g", std::to_string(g));
  r.metadata.emplace_back("observable", "x2");
  detail::push_common_metadata(r, opt);
  return r;
}

// g = +inf spectrum over c: the lowest n_levels merged hard-wall levels per
// sample, each cell tagged with its kind, plus the regime letter per sample.
inline ScanResult sweep_infinite(const std::vector<double>& c_samples,
                                 int n_levels,
                                 hardwall::HardwallOptions opt = {}) {
  if (c_samples.empty() || !(c_samples.front() > 0.0))
    throw std::domain_error("sweep_infinite: need samples with min > 0");
  ScanResult r;
  r.axis = Axis::C;
  r.samples = c_samples;
  for (int k = 0; k < n_levels; ++k)
    r.curve_labels.push_back("eps_rank" + std::to_string(k));
  for (double c : c_samples) {
    auto merged = hardwall::merged_spectrum(c, n_levels, opt);
    std::vector<double> row;
    std::vector<std::string> tag;
    for (int k = 0; k < n_levels; ++k) {
      if (k < static_cast<int>(merged.size())) {
        const auto& m = merged[k];
        row.push_back(m.level.epsilon);
        std::string t =
            (m.level.kind == hardwall::HardwallKind::Inside
                 ? "in_" + parity_name(m.level.parity) + "_"
                 : "out_") +
            std::to_string(m.level.index);
        if (m.triple) t += "*";
        tag.push_back(t);
      } else {  // fewer levels in window than requested
        row.push_back(row.empty() ? 0.0 : row.back());
        tag.push_back("none");
      }
    }
    r.values.push_back(row);
    r.tags.push_back(tag);
    r.sample_tags.push_back(
        hardwall::regime_name(hardwall::classify_regime(c, opt)));
  }
  r.metadata.emplace_back("axis", "c");
  r.metadata.emplace_back("g", "inf");
  r.metadata.emplace_back("solver_version", "1.0.0");
  return r;
}

}  // namespace twindelta::scan
