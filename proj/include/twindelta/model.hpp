#pragma once

// Shared domain types for the two-particle relative problem
//   H = -d^2/dx^2 + x^2/4 + g [delta(x+c) + delta(x-c)]
// in oscillator units.  Energies are eps = Q + 1/2 where Q is the
// parabolic-cylinder order.

#include <string>

namespace twindelta {

struct ModelParams {
  double g = 0.0;  // coupling, oscillator units; finite here (g = inf lives in hardwall)
  double c = 0.0;  // displacement of the interaction centers, >= 0
};

enum class Parity { Even, Odd };  // Even <-> bosonic (n even), Odd <-> fermionic

inline int parity_sign(Parity p) { return p == Parity::Even ? 1 : -1; }
inline Parity parity_of(int n) { return n % 2 == 0 ? Parity::Even : Parity::Odd; }
inline std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

enum class LevelKind { Regular, Dark };

struct EnergyLevel {
  int n = 0;                   // node-count label, parity = n mod 2
  Parity parity = Parity::Even;
  double epsilon = 0.0;        // energy, oscillator units
  double q = 0.0;              // epsilon - 1/2
  LevelKind kind = LevelKind::Regular;
};

// Options shared by the spectral root scans.
struct SolveOptions {
  double q_min = -40.0;
  double q_max = 40.0;
  double dq = 0.01;          // bracketing grid step
  double bisect_tol = 1e-10;
  double pole_tol = 1e-8;    // denominator-cancellation threshold
  double dark_tol = 1e-9;    // |c - c*| window for exact dark insertion
  bool validate_nodes = false;  // cross-check labels against node counts
};

}  // namespace twindelta
