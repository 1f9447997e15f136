#pragma once

#include <complex>
#include <random>

#include "superfock/superstate.hpp"

namespace test_helpers {

using Cd = std::complex<double>;

inline bool close(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

inline bool close(Cd a, Cd b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

inline superfock::SuperState<double> random_state(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto s = superfock::zero_state<double>(dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    s.psi0(n) = Cd(gauss(rng), gauss(rng));
    s.psi1(n) = Cd(gauss(rng), gauss(rng));
  }
  return superfock::normalized(s);
}

}  // namespace test_helpers
