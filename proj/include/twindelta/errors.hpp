#pragma once

#include <stdexcept>
#include <string>

namespace twindelta {

// Base class for everything this library throws on its own behalf.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Gamma evaluated at a non-positive integer.
struct pole_error : error {
  explicit pole_error(const std::string& msg) : error(msg) {}
};

// A special-function branch could not reach the requested accuracy.
struct accuracy_error : error {
  explicit accuracy_error(const std::string& msg) : error(msg) {}
};

// Fewer spectral roots than requested inside the configured order window.
struct range_exhausted_error : error {
  explicit range_exhausted_error(const std::string& msg) : error(msg) {}
};

// Level index assignment contradicts the node count of the eigenfunction.
struct labeling_error : error {
  explicit labeling_error(const std::string& msg) : error(msg) {}
};

// Normalization quadrature failed to converge.
struct normalization_error : error {
  explicit normalization_error(const std::string& msg) : error(msg) {}
};

// Iterative eigensolver or quadrature hit its iteration/depth cap.
struct convergence_error : error {
  explicit convergence_error(const std::string& msg) : error(msg) {}
};

}  // namespace twindelta
