#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <utility>

#include "superfock/fock.hpp"
#include "superfock/superstate.hpp"
#include "superfock/types.hpp"

namespace superfock {

/// Quadrature means and dispersions (hbar = 1 throughout).
template <typename Scalar>
struct QuadratureStats {
  Scalar mean_x = 0;
  Scalar mean_p = 0;
  Scalar var_x = 0;
  Scalar var_p = 0;
  Scalar product = 0;  // sqrt(var_x * var_p)
};

namespace detail {

template <typename Scalar>
Scalar block_expectation(const FockOperator<Scalar>& op, const SuperState<Scalar>& s) {
  const std::complex<Scalar> v = s.psi0.dot(op * s.psi0) + s.psi1.dot(op * s.psi1);
  return v.real();
}

// Second moments amplify the occupation tail, so refuse to report them when
// the top two levels still carry weight.
template <typename Scalar>
void require_top_levels_empty(const SuperState<Scalar>& s, Scalar tail_tol,
                              Eigen::Index first_untrusted) {
  const Eigen::Index from = std::max<Eigen::Index>(first_untrusted, 0);
  const Scalar mass = tail_mass(s, from);
  if (mass > tail_tol) {
    throw TruncationError(
        "occupation mass " + std::to_string(mass) + " above level " + std::to_string(from),
        s.dim() * 2);
  }
}

}  // namespace detail

/// Matrix-expectation statistics of X = I_f (x) X_b and P = I_f (x) P_b.
template <typename Scalar>
QuadratureStats<Scalar> quadrature_stats(const SuperState<Scalar>& s,
                                         Scalar norm_tol = Scalar(1e-10),
                                         Scalar tail_tol = Scalar(1e-12),
                                         Eigen::Index first_untrusted = -1) {
  require_normalized(s, norm_tol);
  if (first_untrusted < 0) first_untrusted = s.dim() - 2;
  detail::require_top_levels_empty(s, tail_tol, first_untrusted);
  const auto [x, p] = quadratures<Scalar>(s.dim());
  QuadratureStats<Scalar> stats;
  stats.mean_x = detail::block_expectation(x, s);
  stats.mean_p = detail::block_expectation(p, s);
  // X, P are Hermitian, so <O^2> = ||O psi0||^2 + ||O psi1||^2.
  stats.var_x = (x * s.psi0).squaredNorm() + (x * s.psi1).squaredNorm() -
                stats.mean_x * stats.mean_x;
  stats.var_p = (p * s.psi0).squaredNorm() + (p * s.psi1).squaredNorm() -
                stats.mean_p * stats.mean_p;
  stats.product = std::sqrt(stats.var_x * stats.var_p);
  return stats;
}

template <typename Scalar>
void require_concurrence_in_range(Scalar concurrence) {
  if (!(concurrence >= Scalar(0) && concurrence <= Scalar(1))) {
    throw InvalidArgumentError("concurrence outside [0, 1]");
  }
}

/// Closed-form quadrature means of the super-coherent family:
///   <X> = sqrt(2) Re alpha + sqrt(C(1-C)) cos phi   (sign flipped for B-),
///   <P> = sqrt(2) Im alpha + sqrt(C(1-C)) sin phi.
template <typename Scalar>
std::pair<Scalar, Scalar> mean_closed_form(std::complex<Scalar> alpha, Scalar concurrence,
                                           Scalar phi, BellLabel label = BellLabel::Lplus) {
  require_concurrence_in_range(concurrence);
  const Scalar flip = (label == BellLabel::Bminus) ? Scalar(-1) : Scalar(1);
  const Scalar amp = flip * std::sqrt(concurrence * (Scalar(1) - concurrence));
  const Scalar sqrt2 = std::sqrt(Scalar(2));
  return {sqrt2 * alpha.real() + amp * std::cos(phi),
          sqrt2 * alpha.imag() + amp * std::sin(phi)};
}

/// Closed-form dispersions, independent of alpha:
///   (DX)^2 = (1+C)/2 - C(1-C) cos^2 phi,   (DP)^2 = (1+C)/2 - C(1-C) sin^2 phi.
template <typename Scalar>
std::pair<Scalar, Scalar> dispersion_closed_form(Scalar concurrence, Scalar phi) {
  require_concurrence_in_range(concurrence);
  const Scalar a = (Scalar(1) + concurrence) / Scalar(2);
  const Scalar b = concurrence * (Scalar(1) - concurrence);
  const Scalar c = std::cos(phi);
  const Scalar s = std::sin(phi);
  return {a - b * c * c, a - b * s * s};
}

/// DX DP = (1/2) sqrt(1 + C^2 + 2C^3 + C^2 (1-C)^2 sin^2 2phi).
template <typename Scalar>
Scalar uncertainty_product(Scalar concurrence, Scalar phi) {
  require_concurrence_in_range(concurrence);
  const Scalar c2 = concurrence * concurrence;
  const Scalar s = std::sin(Scalar(2) * phi);
  const Scalar omc = Scalar(1) - concurrence;
  return std::sqrt(Scalar(1) + c2 + Scalar(2) * c2 * concurrence + c2 * omc * omc * s * s) /
         Scalar(2);
}

/// (DX)^2 + (DP)^2 - (1 + C^2); identically zero for the closed forms.
template <typename Scalar>
Scalar pythagoras_residual(Scalar concurrence, Scalar phi) {
  const auto [vx, vp] = dispersion_closed_form(concurrence, phi);
  return vx + vp - (Scalar(1) + concurrence * concurrence);
}

/// Displacement amplitude that zeroes both quadrature means:
/// alpha = -sqrt(C(1-C)/2) e^{i phi}.
template <typename Scalar>
std::complex<Scalar> vanishing_mean_alpha(Scalar concurrence, Scalar phi) {
  require_concurrence_in_range(concurrence);
  const Scalar r = std::sqrt(concurrence * (Scalar(1) - concurrence) / Scalar(2));
  return -r * std::exp(std::complex<Scalar>(0, phi));
}

/// Variance surface f(C, phi) = (DX)^2 and its analytic Hessian determinant.
template <typename Scalar>
Scalar variance_surface(Scalar concurrence, Scalar phi) {
  return dispersion_closed_form(concurrence, phi).first;
}

template <typename Scalar>
Scalar variance_hessian_det(Scalar concurrence, Scalar phi) {
  const Scalar c = concurrence;
  const Scalar cos_phi = std::cos(phi);
  const Scalar sin_2phi = std::sin(Scalar(2) * phi);
  const Scalar cos_2phi = std::cos(Scalar(2) * phi);
  const Scalar f_cc = Scalar(2) * cos_phi * cos_phi;
  const Scalar f_pp = Scalar(2) * c * (Scalar(1) - c) * cos_2phi;
  const Scalar f_cp = (Scalar(1) - Scalar(2) * c) * sin_2phi;
  return f_cc * f_pp - f_cp * f_cp;
}

enum class CriticalKind { minimum, maximum, saddle };
enum class Quadrature { x, p };

template <typename Scalar>
struct SqueezeCriticalPoint {
  Scalar concurrence = 0;
  Scalar phi = 0;
  Scalar var_value = 0;
  Scalar hessian_det = 0;
  CriticalKind classification = CriticalKind::minimum;
  Quadrature quadrature = Quadrature::x;
};

/// Critical points of the X-dispersion surface (and the P mirror): local
/// minima at C = 1/4, phi in {0, pi} with value 7/16 and Hessian 3/4; the P
/// quadrature mirrors them at phi in {pi/2, 3pi/2}.
template <typename Scalar>
std::array<SqueezeCriticalPoint<Scalar>, 4> squeeze_critical_points() {
  std::array<SqueezeCriticalPoint<Scalar>, 4> points;
  const Scalar c = Scalar(0.25);
  const std::array<Scalar, 4> phis = {Scalar(0), Scalar(pi), Scalar(pi) / Scalar(2),
                                      Scalar(3) * Scalar(pi) / Scalar(2)};
  for (std::size_t i = 0; i < 4; ++i) {
    auto& pt = points[i];
    pt.concurrence = c;
    pt.phi = phis[i];
    pt.quadrature = (i < 2) ? Quadrature::x : Quadrature::p;
    const auto [vx, vp] = dispersion_closed_form(c, pt.phi);
    pt.var_value = (pt.quadrature == Quadrature::x) ? vx : vp;
    // By the phi -> phi + pi/2 mirror symmetry the P surface has the same
    // Hessian at its critical points as the X surface at phi in {0, pi}.
    pt.hessian_det = variance_hessian_det(c, (i < 2) ? pt.phi : pt.phi - Scalar(pi) / Scalar(2));
    pt.classification = CriticalKind::minimum;
  }
  return points;
}

template <typename Scalar>
Scalar super_number_mean(const SuperState<Scalar>& s, Scalar norm_tol = Scalar(1e-10)) {
  require_normalized(s, norm_tol);
  Scalar mean = 0;
  for (Eigen::Index n = 0; n < s.dim(); ++n) {
    mean += static_cast<Scalar>(n) * std::norm(s.psi0(n));
    mean += static_cast<Scalar>(n + 1) * std::norm(s.psi1(n));
  }
  return mean;
}

template <typename Scalar>
Scalar super_number_second_moment(const SuperState<Scalar>& s,
                                  Scalar norm_tol = Scalar(1e-10)) {
  require_normalized(s, norm_tol);
  Scalar m2 = 0;
  for (Eigen::Index n = 0; n < s.dim(); ++n) {
    m2 += static_cast<Scalar>(n) * static_cast<Scalar>(n) * std::norm(s.psi0(n));
    m2 += static_cast<Scalar>(n + 1) * static_cast<Scalar>(n + 1) * std::norm(s.psi1(n));
  }
  return m2;
}

/// Mandel Q of the super-number operator: (<N^2> - <N>^2)/<N> - 1.
/// Undefined (zero mean) for states without superparticle content.
template <typename Scalar>
Scalar mandel_q(const SuperState<Scalar>& s, Scalar norm_tol = Scalar(1e-10),
                Scalar tail_tol = Scalar(1e-12), Scalar cmp_tol = Scalar(1e-9),
                Eigen::Index first_untrusted = -1) {
  require_normalized(s, norm_tol);
  if (first_untrusted < 0) first_untrusted = s.dim() - 2;
  detail::require_top_levels_empty(s, tail_tol, first_untrusted);
  const Scalar mean = super_number_mean(s, norm_tol);
  if (mean <= cmp_tol) {
    throw UndefinedMomentError("mandel_q undefined: <N> = " + std::to_string(mean));
  }
  const Scalar m2 = super_number_second_moment(s, norm_tol);
  return (m2 - mean * mean) / mean - Scalar(1);
}

}  // namespace superfock
