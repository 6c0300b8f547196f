#include <doctest.h>

#include <cmath>

#include "twindelta/oracle.hpp"

using namespace twindelta;
using namespace twindelta::oracle;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("free harmonic spectrum and moments") {
  auto r = grid_eigensolve({0.0, 0.0}, {10.0, 0.002}, 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(r.eigenvalues[i] - (i + 0.5)) < 5e-4);
    CHECK(std::abs(r.second_moments[i] - (2.0 * i + 1.0)) < 5e-3);
  }
}

TEST_CASE("grid convergence under h halving") {
  // second order at g = 0, at least first order with the delta terms
  GridSpec h1{10.0, 0.004};
  GridSpec h2{10.0, 0.002};
  GridSpec h4{10.0, 0.001};
  for (double g : {0.0, 10.0}) {
    ModelParams p{g, 0.75};
    auto e1 = grid_eigensolve(p, h1, 4).eigenvalues;
    auto e2 = grid_eigensolve(p, h2, 4).eigenvalues;
    auto e4 = grid_eigensolve(p, h4, 4).eigenvalues;
    for (int i = 0; i < 4; ++i) {
      double d12 = std::abs(e1[i] - e2[i]);
      double d24 = std::abs(e2[i] - e4[i]);
      CHECK(d12 > (g == 0.0 ? 1.8 : 1.4) * d24);
    }
  }
}

TEST_CASE("delta models agree within their mutual error") {
  ModelParams p{10.0, 0.75};
  auto cn = grid_eigensolve_certified(p, {10.0, 0.002, DeltaModel::NearestPoint}, 4);
  auto cs = grid_eigensolve_certified(p, {10.0, 0.002, DeltaModel::SplitWeight}, 4);
  for (int i = 0; i < 4; ++i) {
    double mutual = cn.certified_error[i] + cs.certified_error[i];
    CHECK(std::abs(cn.fine.eigenvalues[i] - cs.fine.eigenvalues[i]) <=
          3.0 * mutual + 1e-9);
  }
}

TEST_CASE("pseudo-hard-wall limit matches the hardwall module bound") {
  auto r = grid_eigensolve({1e6, 0.75}, {10.0, 0.002}, 2);
  // outside pair at c = 0.75 is doubly degenerate
  CHECK(std::abs(r.eigenvalues[0] - r.eigenvalues[1]) < 1e-6);
}

TEST_CASE("contact reference: endpoints and grid cross-check") {
  auto free = contact_reference(0.0, 3);
  CHECK(free[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(free[1] == doctest::Approx(2.5).epsilon(1e-10));
  CHECK(free[2] == doctest::Approx(4.5).epsilon(1e-10));

  auto fermi = contact_reference(1e8, 2);
  CHECK(std::abs(fermi[0] - 1.5) < 1e-6);
  CHECK(std::abs(fermi[1] - 3.5) < 1e-6);

  // grid solve with both deltas at the origin folds the strength to 2g
  auto ref = contact_reference(1.0, 2);
  auto grid = grid_eigensolve({1.0, 0.0}, {10.0, 0.001}, 3);
  CHECK(std::abs(ref[0] - grid.eigenvalues[0]) < 2e-3);
  CHECK(std::abs(ref[1] - grid.eigenvalues[2]) < 2e-3);  // eig[1] is odd
}

TEST_CASE("grid spec validation") {
  CHECK_THROWS_AS((void)grid_eigensolve({0.0, 3.0}, {10.0, 0.002}, 2),
                  std::domain_error);  // L < c + 8
  CHECK_THROWS_AS((void)grid_eigensolve({0.0, 0.0}, {10.0, 0.01}, 2),
                  std::domain_error);  // h too coarse
  CHECK_THROWS_AS((void)grid_eigensolve({0.0, 0.0}, {10.0, 0.002}, 25),
                  std::domain_error);  // k cap
}

TEST_SUITE_END();
