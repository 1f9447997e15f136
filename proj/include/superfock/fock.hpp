#pragma once

#include <algorithm>
#include <complex>
#include <utility>

#include <unsupported/Eigen/MatrixFunctions>

#include "superfock/types.hpp"

namespace superfock {

/// Ladder operator a on the truncated basis: entry (n-1, n) = sqrt(n).
template <typename Scalar>
FockOperator<Scalar> annihilation(Eigen::Index dim) {
  if (dim < 2) throw InvalidDimensionError("annihilation: dim must be >= 2");
  FockOperator<Scalar> a = FockOperator<Scalar>::Zero(dim, dim);
  for (Eigen::Index n = 1; n < dim; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<Scalar>(n));
  }
  return a;
}

template <typename Scalar>
FockOperator<Scalar> creation(Eigen::Index dim) {
  return annihilation<Scalar>(dim).adjoint();
}

/// N = a^dag a = diag(0, 1, ..., dim-1).
template <typename Scalar>
FockOperator<Scalar> number_operator(Eigen::Index dim) {
  if (dim < 1) throw InvalidDimensionError("number_operator: dim must be >= 1");
  FockOperator<Scalar> n = FockOperator<Scalar>::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) n(k, k) = static_cast<Scalar>(k);
  return n;
}

/// Poisson occupation mass of |alpha> beyond the first dim levels.
template <typename Scalar>
Scalar coherent_tail_mass(std::complex<Scalar> alpha, Eigen::Index dim) {
  const Scalar r = std::norm(alpha);
  Scalar term = std::exp(-r);
  Scalar cumulative = term;
  for (Eigen::Index n = 1; n < dim; ++n) {
    term *= r / static_cast<Scalar>(n);
    cumulative += term;
  }
  return std::max<Scalar>(Scalar(0), Scalar(1) - cumulative);
}

/// Smallest dimension whose coherent tail mass is within tail_tol.
template <typename Scalar>
Eigen::Index required_dim(std::complex<Scalar> alpha, Scalar tail_tol) {
  const Scalar r = std::norm(alpha);
  Scalar term = std::exp(-r);
  Scalar cumulative = term;
  constexpr Eigen::Index cap = 1 << 14;
  for (Eigen::Index n = 1; n < cap; ++n) {
    if (Scalar(1) - cumulative <= tail_tol) return n;
    term *= r / static_cast<Scalar>(n);
    cumulative += term;
  }
  return cap;
}

template <typename Scalar>
void require_truncation_adequate(std::complex<Scalar> alpha, Eigen::Index dim,
                                 Scalar tail_tol) {
  if (coherent_tail_mass(alpha, dim) > tail_tol) {
    throw TruncationError("truncation too small for |alpha| = " +
                              std::to_string(std::abs(alpha)),
                          required_dim(alpha, tail_tol));
  }
}

/// Glauber coherent state D(alpha)|0> with amplitudes e^{-|alpha|^2/2} alpha^n / sqrt(n!).
/// The running amplitude is built recursively, never through explicit factorials.
template <typename Scalar>
FockVector<Scalar> coherent_state(std::complex<Scalar> alpha, Eigen::Index dim,
                                  Scalar tail_tol = Scalar(1e-12)) {
  if (dim < 1) throw InvalidDimensionError("coherent_state: dim must be >= 1");
  require_truncation_adequate(alpha, dim, tail_tol);
  FockVector<Scalar> v(dim);
  std::complex<Scalar> amp = std::exp(std::complex<Scalar>(-std::norm(alpha) / Scalar(2), 0));
  v(0) = amp;
  for (Eigen::Index n = 1; n < dim; ++n) {
    amp *= alpha / std::sqrt(static_cast<Scalar>(n));
    v(n) = amp;
  }
  return v;
}

/// D(alpha) = exp(alpha a^dag - conj(alpha) a), scaling-and-squaring matrix
/// exponential of the truncated generator. Unitary up to truncation: trust the
/// block of indices below trusted_dim(dim, alpha).
template <typename Scalar>
FockOperator<Scalar> displacement(std::complex<Scalar> alpha, Eigen::Index dim,
                                  Scalar tail_tol = Scalar(1e-12)) {
  if (dim < 2) throw InvalidDimensionError("displacement: dim must be >= 2");
  require_truncation_adequate(alpha, dim, tail_tol);
  const FockOperator<Scalar> a = annihilation<Scalar>(dim);
  FockOperator<Scalar> generator = alpha * a.adjoint() - std::conj(alpha) * a;
  return generator.exp();
}

/// Displaced Fock state D(alpha)|n>, i.e. column n of the displacement matrix.
template <typename Scalar>
FockVector<Scalar> displaced_fock(Eigen::Index n, std::complex<Scalar> alpha,
                                  Eigen::Index dim, Scalar tail_tol = Scalar(1e-12)) {
  if (n < 0 || n >= trusted_dim(dim, alpha)) {
    throw InvalidIndexError("displaced_fock: level " + std::to_string(n) +
                            " outside the trusted block");
  }
  return displacement(alpha, dim, tail_tol).col(n);
}

/// X = (a + a^dag)/sqrt(2), P = i(a^dag - a)/sqrt(2); Hermitian by construction.
template <typename Scalar>
std::pair<FockOperator<Scalar>, FockOperator<Scalar>> quadratures(Eigen::Index dim) {
  const FockOperator<Scalar> a = annihilation<Scalar>(dim);
  const FockOperator<Scalar> ad = a.adjoint();
  const Scalar inv_sqrt2 = Scalar(1) / std::sqrt(Scalar(2));
  FockOperator<Scalar> x = (a + ad) * inv_sqrt2;
  FockOperator<Scalar> p = std::complex<Scalar>(0, 1) * (ad - a) * inv_sqrt2;
  return {std::move(x), std::move(p)};
}

}  // namespace superfock
