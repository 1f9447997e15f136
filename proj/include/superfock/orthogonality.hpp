#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "superfock/superstate.hpp"
#include "superfock/types.hpp"

namespace superfock {

/// Closed-form overlap of two L-family super-coherent states at equal
/// super-Bloch coordinates (theta, phi):
///   e^{-i Im(beta conj(alpha))} e^{-|alpha-beta|^2/2} *
///   (1 - (sin theta / (2 sqrt 2)) (conj(w') e^{i phi} - w' e^{-i phi})
///      - (|w'|^2/2) sin^2(theta/2)),   w' = alpha - beta.
template <typename Scalar>
std::complex<Scalar> inner_product_closed_form(std::complex<Scalar> alpha,
                                               std::complex<Scalar> beta, Scalar theta,
                                               Scalar phi, BellLabel label) {
  if (!is_l_family(label)) {
    throw InvalidArgumentError("inner_product_closed_form: defined for the L family");
  }
  if (theta < Scalar(0) || theta > Scalar(pi)) {
    throw InvalidArgumentError("inner_product_closed_form: theta outside [0, pi]");
  }
  using C = std::complex<Scalar>;
  const C w = alpha - beta;
  const Scalar half = theta / Scalar(2);
  const Scalar sin_half = std::sin(half);
  const C phase = std::exp(C(0, -(beta * std::conj(alpha)).imag()));
  const Scalar gauss = std::exp(-std::norm(w) / Scalar(2));
  const C eiphi = std::exp(C(0, phi));
  const C bracket = C(1, 0) -
                    (std::sin(theta) / (Scalar(2) * std::sqrt(Scalar(2)))) *
                        (std::conj(w) * eiphi - w * std::conj(eiphi)) -
                    C(std::norm(w) / Scalar(2) * sin_half * sin_half, 0);
  return phase * gauss * bracket;
}

/// Numeric overlap <beta-state | alpha-state> of two super-coherent states
/// with the same (label, C, phi).
template <typename Scalar>
std::complex<Scalar> super_coherent_overlap(BellLabel label, std::complex<Scalar> alpha,
                                            std::complex<Scalar> beta, Scalar concurrence,
                                            Scalar phi, Eigen::Index dim,
                                            Scalar tail_tol = Scalar(1e-12)) {
  const auto sa = super_coherent(label, alpha, concurrence, phi, dim, tail_tol);
  const auto sb = super_coherent(label, beta, concurrence, phi, dim, tail_tol);
  return inner(sb, sa);
}

enum class OrthoKind { antipodal_pair, circle, triangle };

/// A family of displacement amplitudes whose super-coherent states are
/// orthogonal to the base state, with the numeric evidence attached.
template <typename Scalar>
struct OrthoSolution {
  OrthoKind kind = OrthoKind::antipodal_pair;
  std::complex<Scalar> base_alpha;
  std::vector<std::complex<Scalar>> members;
  Scalar concurrence = 1;
  Scalar phi = 0;
  Scalar max_overlap = 0;      // largest |<member | base>| observed numerically
  Eigen::Index verify_dim = 0;
};

namespace detail {

template <typename Scalar>
Eigen::Index ortho_verify_dim(const OrthoSolution<Scalar>& sol) {
  double top = std::abs(sol.base_alpha);
  for (const auto& b : sol.members) top = std::max(top, std::abs(b));
  return std::max<Eigen::Index>(160, default_dim(std::complex<Scalar>(Scalar(top), 0)));
}

template <typename Scalar>
void attach_numeric_evidence(OrthoSolution<Scalar>& sol, BellLabel label,
                             Eigen::Index dim = 0) {
  sol.verify_dim = dim > 0 ? dim : ortho_verify_dim(sol);
  const auto d_base = super_displacement(sol.base_alpha, sol.verify_dim);
  const auto ref = reference_state(label, sol.concurrence, sol.phi, sol.verify_dim);
  const auto base_state = apply(d_base, ref);
  sol.max_overlap = 0;
  for (const auto& b : sol.members) {
    const auto member_state = apply(super_displacement(b, sol.verify_dim), ref);
    sol.max_overlap = std::max(sol.max_overlap, std::abs(inner(member_state, base_state)));
  }
}

}  // namespace detail

/// The antipodal pair beta(+/-) = alpha +/- sqrt(2/C) e^{i phi}, orthogonal to
/// the alpha state for any 0 < C <= 1. Separable states have no orthogonal
/// partners (the pair escapes to infinity as C -> 0).
template <typename Scalar>
OrthoSolution<Scalar> orthogonal_antipodal_pair(std::complex<Scalar> alpha, Scalar concurrence,
                                                Scalar phi, BellLabel label = BellLabel::Lplus,
                                                Eigen::Index verify_dim = 0) {
  if (!(concurrence > Scalar(0) && concurrence <= Scalar(1))) {
    throw NoOrthogonalStatesError(
        "no orthogonal states for C = " + std::to_string(concurrence) +
        "; the antipodal pair exists only for 0 < C <= 1");
  }
  OrthoSolution<Scalar> sol;
  sol.kind = OrthoKind::antipodal_pair;
  sol.base_alpha = alpha;
  sol.concurrence = concurrence;
  sol.phi = wrap_angle(phi);
  const std::complex<Scalar> step =
      std::sqrt(Scalar(2) / concurrence) * std::exp(std::complex<Scalar>(0, sol.phi));
  sol.members = {alpha + step, alpha - step};
  detail::attach_numeric_evidence(sol, label, verify_dim);
  return sol;
}

/// n_points states on the radius-sqrt(2) circle around alpha, each orthogonal
/// to the alpha state at C = 1.
template <typename Scalar>
OrthoSolution<Scalar> orthogonal_circle(std::complex<Scalar> alpha, int n_points,
                                        BellLabel label = BellLabel::Lplus,
                                        Eigen::Index verify_dim = 0) {
  if (n_points < 3) throw InvalidArgumentError("orthogonal_circle: need n_points >= 3");
  OrthoSolution<Scalar> sol;
  sol.kind = OrthoKind::circle;
  sol.base_alpha = alpha;
  sol.concurrence = Scalar(1);
  sol.phi = Scalar(0);
  const Scalar radius = std::sqrt(Scalar(2));
  sol.members.reserve(n_points);
  for (int k = 0; k < n_points; ++k) {
    const Scalar t = Scalar(two_pi) * static_cast<Scalar>(k) / static_cast<Scalar>(n_points);
    sol.members.push_back(alpha + radius * std::exp(std::complex<Scalar>(0, t)));
  }
  detail::attach_numeric_evidence(sol, label, verify_dim);
  return sol;
}

/// The equilateral triple {alpha, alpha + sqrt2 e^{i t1}, alpha + sqrt2 e^{i(t1+pi/3)}}
/// of mutually orthogonal C = 1 states. members holds all three vertices;
/// max_overlap covers all pairs.
template <typename Scalar>
OrthoSolution<Scalar> orthogonal_triangle(std::complex<Scalar> alpha, Scalar t1,
                                          BellLabel label = BellLabel::Lplus,
                                          Eigen::Index verify_dim = 0) {
  OrthoSolution<Scalar> sol;
  sol.kind = OrthoKind::triangle;
  sol.base_alpha = alpha;
  sol.concurrence = Scalar(1);
  sol.phi = Scalar(0);
  const Scalar radius = std::sqrt(Scalar(2));
  sol.members = {alpha, alpha + radius * std::exp(std::complex<Scalar>(0, t1)),
                 alpha + radius * std::exp(std::complex<Scalar>(0, t1 + Scalar(pi) / Scalar(3)))};

  sol.verify_dim = verify_dim > 0 ? verify_dim : detail::ortho_verify_dim(sol);
  const auto ref = reference_state(label, sol.concurrence, sol.phi, sol.verify_dim);
  std::vector<SuperState<Scalar>> states;
  states.reserve(sol.members.size());
  for (const auto& m : sol.members) {
    states.push_back(apply(super_displacement(m, sol.verify_dim), ref));
  }
  sol.max_overlap = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      sol.max_overlap = std::max(sol.max_overlap, std::abs(inner(states[i], states[j])));
    }
  }
  return sol;
}

}  // namespace superfock
