#include <doctest.h>

#include <cmath>

#include "twindelta/hardwall.hpp"
#include "twindelta/oracle.hpp"
#include "twindelta/relative.hpp"

using namespace twindelta;
using namespace twindelta::hardwall;

TEST_SUITE_BEGIN("hardwall");

TEST_CASE("inside levels: truncation limit and box-dominated limit") {
  // walls beyond the Gaussian tail: harmonic values up to exponentially
  // small wall shifts (the shift grows with n as |phi_n(c)|^2)
  auto in6 = inside_levels(6.0, Parity::Even, 2);
  CHECK(std::abs(in6[0].epsilon - 0.5) < 1e-6);
  CHECK(std::abs(in6[1].epsilon - 2.5) < 1e-4);
  auto in6o = inside_levels(6.0, Parity::Odd, 1);
  CHECK(std::abs(in6o[0].epsilon - 1.5) < 1e-5);
  // box-dominated limit
  auto in05 = inside_levels(0.5, Parity::Even, 1);
  CHECK(std::abs(in05[0].epsilon - M_PI * M_PI) < 0.05 * M_PI * M_PI);
  // c = 1.5: the interval ground state undercuts every outside level
  auto in15 = inside_levels(1.5, Parity::Even, 1);
  auto out15 = outside_levels(1.5, 1);
  CHECK(in15[0].epsilon < out15[0].epsilon);
}

TEST_CASE("inside levels validated by the pseudo-wall grid oracle") {
  auto cert = oracle::grid_eigensolve_certified({1e6, 6.0}, {14.0, 0.002}, 3);
  auto ev = inside_levels(6.0, Parity::Even, 2);
  auto od = inside_levels(6.0, Parity::Odd, 1);
  CHECK(std::abs(ev[0].epsilon - cert.fine.eigenvalues[0]) < 1e-4);
  CHECK(std::abs(od[0].epsilon - cert.fine.eigenvalues[1]) < 1e-4);
  CHECK(std::abs(ev[1].epsilon - cert.fine.eigenvalues[2]) < 1e-4);
}

TEST_CASE("outside levels: wall at the origin and variational growth") {
  auto out0 = outside_levels(0.0, 3);
  CHECK(out0[0].epsilon == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(out0[1].epsilon == doctest::Approx(3.5).epsilon(1e-9));
  CHECK(out0[2].epsilon == doctest::Approx(5.5).epsilon(1e-9));
  for (const auto& l : out0) CHECK(l.multiplicity == 2);
  CHECK(outside_partner_labels(1) == std::pair<int, int>{2, 3});

  auto orc = oracle::grid_eigensolve({1e6, 0.75}, {10.0, 0.002}, 1);
  auto out75 = outside_levels(0.75, 1);
  CHECK(std::abs(out75[0].epsilon - orc.eigenvalues[0]) < 1e-2);

  double prev = 0.0;
  for (double c : {2.0, 3.0, 4.0}) {
    double e = outside_levels(c, 1)[0].epsilon;
    CHECK(e > prev);
    prev = e;
  }
}

TEST_CASE("dark points enumerate Hermite roots scaled by sqrt(2)") {
  // H_1 only vanishes at the origin, so n = 1 contributes no dark point;
  // n <= 4 gives four: n=4 twice (c^2 = 3 -+ sqrt(6)), n=2, n=3
  auto pts = dark_points(4, 4.0);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].n == 4);
  CHECK(pts[0].c_star == doctest::Approx(0.741963784302726).epsilon(1e-12));
  CHECK(pts[0].parity == Parity::Even);
  CHECK(pts[1].n == 2);
  CHECK(pts[1].c_star == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pts[2].n == 3);
  CHECK(pts[2].c_star == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(pts[2].parity == Parity::Odd);
  CHECK(pts[3].n == 4);
  CHECK(pts[3].c_star == doctest::Approx(2.334414218338978).epsilon(1e-12));
  for (const auto& d : pts)
    CHECK(std::abs(specfun::hermite_value(d.n, d.c_star / std::sqrt(2.0))) <
          1e-9);
  // a c_max cut keeps only the points below it
  CHECK(dark_points(4, 2.0).size() == 3);
}

TEST_CASE("merged spectrum flags triple degeneracy at dark displacements") {
  auto mg = merged_spectrum(1.0, 6);
  bool found = false;
  for (std::size_t i = 0; i + 1 < mg.size(); ++i) {
    if (mg[i].triple) {
      found = true;
      CHECK(std::abs(mg[i].level.epsilon - 2.5) < 1e-8);
    }
  }
  CHECK(found);
  // c away from any dark point: no triples among the low levels
  for (const auto& m : merged_spectrum(1.2, 6)) CHECK(!m.triple);
  // small c: lowest levels all outside; large c: all inside
  for (const auto& m : merged_spectrum(0.3, 4))
    CHECK(m.level.kind == HardwallKind::Outside);
  auto big = merged_spectrum(6.0, 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(big[i].level.kind == HardwallKind::Inside);
    // the wall shift grows with n like |phi_n(c)|^2; ~4e-4 by n = 3
    CHECK(std::abs(big[i].level.epsilon - (i + 0.5)) < 1e-3);
  }
}

TEST_CASE("even-sector spectral poles sit on the even inside levels") {
  // denominator zeros of the finite-g equation = g = inf inner spectrum
  const double c = 1.3;
  auto in_even = inside_levels(c, Parity::Even, 2);
  for (const auto& lvl : in_even) {
    double q = lvl.epsilon - 0.5;
    bool near = rel::spectral_function(q + 5e-9, {1.0, c}, Parity::Even)
                    .near_pole;
    bool off = rel::spectral_function(q + 0.05, {1.0, c}, Parity::Even)
                   .near_pole;
    CHECK(near);
    CHECK(!off);
  }
}

TEST_CASE("regime classification partitions the axis") {
  CHECK(classify_regime(0.3) == Regime::Exclusion);
  CHECK(classify_regime(1.5) == Regime::Crossover);
  CHECK(classify_regime(6.0) == Regime::Truncation);
  // exactly two boundaries in increasing c
  int changes = 0;
  Regime prev = classify_regime(0.1);
  CHECK(prev == Regime::Exclusion);
  for (double c = 0.2; c <= 5.0; c += 0.1) {
    Regime r = classify_regime(c);
    if (r != prev) {
      ++changes;
      CHECK(static_cast<int>(r) == static_cast<int>(prev) + 1);
      prev = r;
    }
  }
  CHECK(changes == 2);
}

TEST_CASE("finite-g levels approach hardwall levels from below") {
  const double c = 1.5;
  auto mg = merged_spectrum(c, 6);
  std::vector<double> hw;
  for (const auto& m : mg)
    for (int r = 0; r < m.level.multiplicity; ++r)
      hw.push_back(m.level.epsilon);
  std::vector<double> prev_gap(4, 1e9);
  for (double g : {1e2, 1e3, 1e4}) {
    auto lv = rel::solve_levels_both({g, c}, 4);
    for (int i = 0; i < 4; ++i) {
      double gap = hw[i] - lv[i].epsilon;
      CHECK(gap > 0.0);
      CHECK(gap < prev_gap[i]);
      prev_gap[i] = gap;
    }
  }
}

TEST_SUITE_END();
