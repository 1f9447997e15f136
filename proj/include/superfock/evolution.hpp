#pragma once

#include <complex>
#include <vector>

#include "superfock/entanglement.hpp"
#include "superfock/superstate.hpp"
#include "superfock/types.hpp"

namespace superfock {

template <typename Scalar>
struct EvolutionParams {
  Scalar omega = 1;  // angular frequency, radians per unit time
  Scalar t = 0;
};

/// Evolution under the block-diagonal propagator diag(e^{-i w t N}, e^{-i w t (N+1)}):
/// pure level-wise phases, so the norm is preserved exactly.
template <typename Scalar>
SuperState<Scalar> evolve(const SuperState<Scalar>& s, const EvolutionParams<Scalar>& params) {
  if (!std::isfinite(params.omega) || !std::isfinite(params.t)) {
    throw InvalidArgumentError("evolve: omega and t must be finite");
  }
  SuperState<Scalar> out = s;
  const Scalar wt = params.omega * params.t;
  for (Eigen::Index n = 0; n < s.dim(); ++n) {
    out.psi0(n) *= std::exp(std::complex<Scalar>(0, -wt * static_cast<Scalar>(n)));
    out.psi1(n) *= std::exp(std::complex<Scalar>(0, -wt * static_cast<Scalar>(n + 1)));
  }
  return out;
}

template <typename Scalar>
struct ConstancyReport {
  Scalar base_concurrence = 0;
  Scalar max_deviation = 0;
  std::vector<Scalar> deviations;
  bool pass(Scalar cmp_tol) const { return max_deviation <= cmp_tol; }
};

/// max_t |C(U(t) s) - C(s)| over the supplied times.
template <typename Scalar>
ConstancyReport<Scalar> entanglement_constancy(const SuperState<Scalar>& s, Scalar omega,
                                               const std::vector<Scalar>& times) {
  ConstancyReport<Scalar> report;
  report.base_concurrence = concurrence_gram(s);
  report.deviations.reserve(times.size());
  for (Scalar t : times) {
    const Scalar c = concurrence_gram(evolve(s, {omega, t}));
    const Scalar dev = std::abs(c - report.base_concurrence);
    report.deviations.push_back(dev);
    report.max_deviation = std::max(report.max_deviation, dev);
  }
  return report;
}

}  // namespace superfock
