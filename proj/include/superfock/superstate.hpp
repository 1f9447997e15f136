#pragma once

#include <algorithm>
#include <complex>
#include <string>

#include "superfock/fock.hpp"
#include "superfock/types.hpp"

namespace superfock {

/// Fermion (x) boson composite state written as the pair of Fock-space
/// branches (psi0, psi1) attached to the fermionic basis states |0>_f, |1>_f.
template <typename Scalar>
struct SuperState {
  FockVector<Scalar> psi0;  // fermion-|0> branch
  FockVector<Scalar> psi1;  // fermion-|1> branch

  Eigen::Index dim() const { return psi0.size(); }
  Scalar squared_norm() const { return psi0.squaredNorm() + psi1.squaredNorm(); }
  Scalar norm() const { return std::sqrt(squared_norm()); }
};

template <typename Scalar>
SuperState<Scalar> zero_state(Eigen::Index dim) {
  return {FockVector<Scalar>::Zero(dim), FockVector<Scalar>::Zero(dim)};
}

template <typename Scalar>
std::complex<Scalar> inner(const SuperState<Scalar>& bra, const SuperState<Scalar>& ket) {
  return bra.psi0.dot(ket.psi0) + bra.psi1.dot(ket.psi1);
}

template <typename Scalar>
SuperState<Scalar> operator+(const SuperState<Scalar>& a, const SuperState<Scalar>& b) {
  return {a.psi0 + b.psi0, a.psi1 + b.psi1};
}

template <typename Scalar>
SuperState<Scalar> operator-(const SuperState<Scalar>& a, const SuperState<Scalar>& b) {
  return {a.psi0 - b.psi0, a.psi1 - b.psi1};
}

template <typename Scalar>
SuperState<Scalar> operator*(std::complex<Scalar> c, const SuperState<Scalar>& s) {
  return {c * s.psi0, c * s.psi1};
}

template <typename Scalar>
SuperState<Scalar> normalized(const SuperState<Scalar>& s) {
  const Scalar n = s.norm();
  if (n == Scalar(0)) throw InvalidStateError("cannot normalize the zero state");
  return {s.psi0 / n, s.psi1 / n};
}

template <typename Scalar>
bool is_normalized(const SuperState<Scalar>& s, Scalar norm_tol = Scalar(1e-10)) {
  return std::abs(s.squared_norm() - Scalar(1)) <= norm_tol;
}

template <typename Scalar>
void require_normalized(const SuperState<Scalar>& s, Scalar norm_tol = Scalar(1e-10)) {
  if (!is_normalized(s, norm_tol)) {
    throw InvalidStateError("state is not normalized: ||s||^2 = " +
                            std::to_string(s.squared_norm()));
  }
}

/// Occupation mass at Fock levels >= from_index, summed over both branches.
template <typename Scalar>
Scalar tail_mass(const SuperState<Scalar>& s, Eigen::Index from_index) {
  const Eigen::Index start = std::clamp<Eigen::Index>(from_index, 0, s.dim());
  const Eigen::Index count = s.dim() - start;
  return s.psi0.segment(start, count).squaredNorm() +
         s.psi1.segment(start, count).squaredNorm();
}

/// 2x2 block operator [[b00, b01], [b10, b11]] acting on (psi0, psi1).
template <typename Scalar>
struct SuperOperator {
  FockOperator<Scalar> b00, b01, b10, b11;

  Eigen::Index dim() const { return b00.rows(); }

  SuperOperator adjoint() const {
    return {b00.adjoint(), b10.adjoint(), b01.adjoint(), b11.adjoint()};
  }
};

template <typename Scalar>
SuperState<Scalar> apply(const SuperOperator<Scalar>& op, const SuperState<Scalar>& s) {
  return {op.b00 * s.psi0 + op.b01 * s.psi1, op.b10 * s.psi0 + op.b11 * s.psi1};
}

template <typename Scalar>
SuperOperator<Scalar> block_diagonal(const FockOperator<Scalar>& top,
                                     const FockOperator<Scalar>& bottom) {
  const Eigen::Index d = top.rows();
  return {top, FockOperator<Scalar>::Zero(d, d), FockOperator<Scalar>::Zero(d, d), bottom};
}

enum class BellLabel { Lplus, Lminus, Bplus, Bminus };

inline std::string to_string(BellLabel label) {
  switch (label) {
    case BellLabel::Lplus: return "Lplus";
    case BellLabel::Lminus: return "Lminus";
    case BellLabel::Bplus: return "Bplus";
    case BellLabel::Bminus: return "Bminus";
  }
  return "?";
}

inline bool is_l_family(BellLabel label) {
  return label == BellLabel::Lplus || label == BellLabel::Lminus;
}

inline int bell_sign(BellLabel label) {
  return (label == BellLabel::Lplus || label == BellLabel::Bplus) ? +1 : -1;
}

/// Zero-superparticle ground state (|0>_f (x) |0>_b).
template <typename Scalar>
SuperState<Scalar> vacuum(Eigen::Index dim) {
  if (dim < 2) throw InvalidDimensionError("vacuum: dim must be >= 2");
  auto s = zero_state<Scalar>(dim);
  s.psi0(0) = Scalar(1);
  return s;
}

/// One-fermion state (|1>_f (x) |0>_b), the f^dag image of the vacuum.
template <typename Scalar>
SuperState<Scalar> one_fermion(Eigen::Index dim) {
  if (dim < 2) throw InvalidDimensionError("one_fermion: dim must be >= 2");
  auto s = zero_state<Scalar>(dim);
  s.psi1(0) = Scalar(1);
  return s;
}

/// Fermion-boson Bell states. Component layout is pinned by tests:
///   L(+/-) = (|0>_f |1>_b  +/-  |1>_f |0>_b) / sqrt(2)  ->  (|1>, +/-|0>)
///   B(+/-) = (|0>_f |0>_b  +/-  |1>_f |1>_b) / sqrt(2)  ->  (|0>, +/-|1>)
template <typename Scalar>
SuperState<Scalar> bell(BellLabel label, Eigen::Index dim) {
  if (dim < 2) throw InvalidDimensionError("bell: dim must be >= 2");
  auto s = zero_state<Scalar>(dim);
  const Scalar w = Scalar(1) / std::sqrt(Scalar(2));
  const Scalar sign = static_cast<Scalar>(bell_sign(label));
  if (is_l_family(label)) {
    s.psi0(1) = w;
    s.psi1(0) = sign * w;
  } else {
    s.psi0(0) = w;
    s.psi1(1) = sign * w;
  }
  return s;
}

/// Generalized Bell state (|n>, +/-|n-1>)/sqrt(2); n = 1 reproduces L(+/-).
template <typename Scalar>
SuperState<Scalar> generalized_bell(Eigen::Index n, int sign, Eigen::Index dim) {
  if (n < 1 || n >= trusted_dim<Scalar>(dim, {})) {
    throw InvalidIndexError("generalized_bell: n outside [1, trusted dim)");
  }
  auto s = zero_state<Scalar>(dim);
  const Scalar w = Scalar(1) / std::sqrt(Scalar(2));
  s.psi0(n) = w;
  s.psi1(n - 1) = (sign >= 0 ? w : -w);
  return s;
}

/// Super-number state cos(theta/2)(|n>, 0) + sin(theta/2) e^{i phi}(0, |n-1>);
/// an exact eigenstate of the super-number operator with eigenvalue n.
template <typename Scalar>
SuperState<Scalar> super_number_state(Eigen::Index n, Scalar theta, Scalar phi,
                                      Eigen::Index dim) {
  if (n < 1 || n >= trusted_dim<Scalar>(dim, {})) {
    throw InvalidIndexError("super_number_state: n outside [1, trusted dim)");
  }
  if (theta < Scalar(0) || theta > Scalar(pi)) {
    throw InvalidArgumentError("super_number_state: theta outside [0, pi]");
  }
  auto s = zero_state<Scalar>(dim);
  const Scalar half = theta / Scalar(2);
  s.psi0(n) = std::cos(half);
  s.psi1(n - 1) = std::sin(half) * std::exp(std::complex<Scalar>(0, wrap_angle(phi)));
  return s;
}

/// Super-number operator diag(N, N + I): counts bosons plus fermions.
template <typename Scalar>
SuperOperator<Scalar> super_number_operator(Eigen::Index dim) {
  const FockOperator<Scalar> n = number_operator<Scalar>(dim);
  const FockOperator<Scalar> id = FockOperator<Scalar>::Identity(dim, dim);
  return block_diagonal<Scalar>(n, n + id);
}

/// Projector onto the fermionic sector (which = 0 or 1).
template <typename Scalar>
SuperOperator<Scalar> fermion_projector(int which, Eigen::Index dim) {
  if (which != 0 && which != 1) throw InvalidArgumentError("fermion_projector: which must be 0 or 1");
  const FockOperator<Scalar> id = FockOperator<Scalar>::Identity(dim, dim);
  const FockOperator<Scalar> zero = FockOperator<Scalar>::Zero(dim, dim);
  return which == 0 ? block_diagonal<Scalar>(id, zero) : block_diagonal<Scalar>(zero, id);
}

/// Projector onto the n-superparticle eigenspace of the super-number operator:
/// diag(|n><n|, |n-1><n-1|), with the fermionic half absent for n = 0.
template <typename Scalar>
SuperOperator<Scalar> superparticle_projector(Eigen::Index n, Eigen::Index dim) {
  if (n < 0 || n >= dim) throw InvalidIndexError("superparticle_projector: n outside [0, dim)");
  FockOperator<Scalar> top = FockOperator<Scalar>::Zero(dim, dim);
  FockOperator<Scalar> bottom = FockOperator<Scalar>::Zero(dim, dim);
  top(n, n) = Scalar(1);
  if (n >= 1) bottom(n - 1, n - 1) = Scalar(1);
  return block_diagonal<Scalar>(top, bottom);
}

/// Super-qubit reference state sqrt(1-C) (vacuum or one-fermion) +
/// sqrt(C) e^{i phi} Bell(label). C is the concurrence of the result.
template <typename Scalar>
SuperState<Scalar> reference_state(BellLabel label, Scalar concurrence, Scalar phi,
                                   Eigen::Index dim) {
  if (!(concurrence >= Scalar(0) && concurrence <= Scalar(1))) {
    throw InvalidArgumentError("reference_state: concurrence outside [0, 1]");
  }
  const SuperState<Scalar> base =
      is_l_family(label) ? vacuum<Scalar>(dim) : one_fermion<Scalar>(dim);
  const std::complex<Scalar> weight =
      std::sqrt(concurrence) * std::exp(std::complex<Scalar>(0, wrap_angle(phi)));
  const std::complex<Scalar> rest(std::sqrt(Scalar(1) - concurrence), 0);
  return rest * base + weight * bell<Scalar>(label, dim);
}

/// Super-Bloch form of the reference state; C = sin^2(theta/2) exactly.
template <typename Scalar>
SuperState<Scalar> reference_state_from_theta(BellLabel label, Scalar theta, Scalar phi,
                                              Eigen::Index dim) {
  if (theta < Scalar(0) || theta > Scalar(pi)) {
    throw InvalidArgumentError("reference_state_from_theta: theta outside [0, pi]");
  }
  const Scalar s = std::sin(theta / Scalar(2));
  return reference_state(label, s * s, phi, dim);
}

/// cos(theta/2) vacuum + sin(theta/2) e^{i phi} |1, theta1, phi1>; its
/// concurrence is sin^2(theta/2) sin(theta1).
template <typename Scalar>
SuperState<Scalar> generic_one_superparticle_reference(Scalar theta, Scalar phi,
                                                       Scalar theta1, Scalar phi1,
                                                       Eigen::Index dim) {
  if (theta < Scalar(0) || theta > Scalar(pi) || theta1 < Scalar(0) || theta1 > Scalar(pi)) {
    throw InvalidArgumentError("generic_one_superparticle_reference: angle outside [0, pi]");
  }
  const Scalar half = theta / Scalar(2);
  const std::complex<Scalar> w =
      std::sin(half) * std::exp(std::complex<Scalar>(0, wrap_angle(phi)));
  return std::complex<Scalar>(std::cos(half), 0) * vacuum<Scalar>(dim) +
         w * super_number_state<Scalar>(1, theta1, phi1, dim);
}

/// Block-diagonal displacement diag(D(alpha), D(alpha)).
template <typename Scalar>
SuperOperator<Scalar> super_displacement(std::complex<Scalar> alpha, Eigen::Index dim,
                                         Scalar tail_tol = Scalar(1e-12)) {
  const FockOperator<Scalar> d = displacement(alpha, dim, tail_tol);
  return block_diagonal<Scalar>(d, d);
}

/// Super-coherent state: the displaced super-qubit reference state.
template <typename Scalar>
SuperState<Scalar> super_coherent(BellLabel label, std::complex<Scalar> alpha,
                                  Scalar concurrence, Scalar phi, Eigen::Index dim,
                                  Scalar tail_tol = Scalar(1e-12)) {
  return apply(super_displacement(alpha, dim, tail_tol),
               reference_state(label, concurrence, phi, dim));
}

/// Residual of the eigenvalue problem Op s = lambda s in the 2-norm, with the
/// untrusted top block (indices >= keep) projected out first; annihilators mix
/// adjacent Fock levels, so truncation noise lives at the top.
template <typename Scalar>
Scalar projected_eigen_residual(const SuperOperator<Scalar>& op, const SuperState<Scalar>& s,
                                std::complex<Scalar> lambda, Eigen::Index keep) {
  SuperState<Scalar> r = apply(op, s) - lambda * s;
  const Eigen::Index d = r.dim();
  const Eigen::Index cut = std::clamp<Eigen::Index>(keep, 0, d);
  r.psi0.segment(cut, d - cut).setZero();
  r.psi1.segment(cut, d - cut).setZero();
  return r.norm();
}

enum class AnnihilatorKind { A0, A1, Am1, AT1, ATm1 };

inline std::string to_string(AnnihilatorKind kind) {
  switch (kind) {
    case AnnihilatorKind::A0: return "A0";
    case AnnihilatorKind::A1: return "A1";
    case AnnihilatorKind::Am1: return "Am1";
    case AnnihilatorKind::AT1: return "AT1";
    case AnnihilatorKind::ATm1: return "ATm1";
  }
  return "?";
}

/// The four super-annihilation operators plus the pure bosonic A0:
///   A(+/-1)   = [[a, +/-1], [0, a]],   AT(+/-1) = [[a, 0], [+/-1, a]],
///   A0        = diag(a, a).
template <typename Scalar>
SuperOperator<Scalar> super_annihilator(AnnihilatorKind kind, Eigen::Index dim) {
  const FockOperator<Scalar> a = annihilation<Scalar>(dim);
  const FockOperator<Scalar> id = FockOperator<Scalar>::Identity(dim, dim);
  const FockOperator<Scalar> zero = FockOperator<Scalar>::Zero(dim, dim);
  switch (kind) {
    case AnnihilatorKind::A0: return {a, zero, zero, a};
    case AnnihilatorKind::A1: return {a, id, zero, a};
    case AnnihilatorKind::Am1: return {a, -id, zero, a};
    case AnnihilatorKind::AT1: return {a, zero, id, a};
    case AnnihilatorKind::ATm1: return {a, zero, -id, a};
  }
  throw InvalidArgumentError("super_annihilator: unknown kind");
}

/// Annihilator whose eigenfamily contains the label's coherent states:
/// A(-1) <-> L+, A(1) <-> L-, AT(-1) <-> B+, AT(1) <-> B-.
inline AnnihilatorKind partner_annihilator(BellLabel label) {
  switch (label) {
    case BellLabel::Lplus: return AnnihilatorKind::Am1;
    case BellLabel::Lminus: return AnnihilatorKind::A1;
    case BellLabel::Bplus: return AnnihilatorKind::ATm1;
    case BellLabel::Bminus: return AnnihilatorKind::AT1;
  }
  throw InvalidArgumentError("partner_annihilator: unknown label");
}

/// Residuals of the ladder identities between the vacuum sector and the Bell
/// states:  |L+/-> = A^dag(+/-1)|vac>/sqrt(2) and back, plus the B/one-fermion
/// analogue with its extra sign.
template <typename Scalar>
struct RaiseToBellRecord {
  int sign = +1;
  Scalar raise_l = 0;   // || A^dag(s) vac / sqrt2 - L(s) ||
  Scalar lower_l = 0;   // || A(s) L(s) / sqrt2 - vac ||
  Scalar raise_b = 0;   // || s * AT(s)^dag one_fermion / sqrt2 - B(s) ||
  Scalar lower_b = 0;   // || s * AT(s) B(s) / sqrt2 - one_fermion ||
  Scalar max_residual() const {
    return std::max({raise_l, lower_l, raise_b, lower_b});
  }
  bool pass(Scalar eig_tol) const { return max_residual() <= eig_tol; }
};

template <typename Scalar>
RaiseToBellRecord<Scalar> raise_to_bell(int sign, Eigen::Index dim) {
  const auto a_kind = sign >= 0 ? AnnihilatorKind::A1 : AnnihilatorKind::Am1;
  const auto at_kind = sign >= 0 ? AnnihilatorKind::AT1 : AnnihilatorKind::ATm1;
  const auto l_label = sign >= 0 ? BellLabel::Lplus : BellLabel::Lminus;
  const auto b_label = sign >= 0 ? BellLabel::Bplus : BellLabel::Bminus;

  const auto op_a = super_annihilator<Scalar>(a_kind, dim);
  const auto op_at = super_annihilator<Scalar>(at_kind, dim);
  const auto vac = vacuum<Scalar>(dim);
  const auto onef = one_fermion<Scalar>(dim);
  const auto l = bell<Scalar>(l_label, dim);
  const auto b = bell<Scalar>(b_label, dim);

  const std::complex<Scalar> inv_sqrt2(Scalar(1) / std::sqrt(Scalar(2)), 0);
  const std::complex<Scalar> signed_inv = (sign >= 0 ? inv_sqrt2 : -inv_sqrt2);

  RaiseToBellRecord<Scalar> record;
  record.sign = sign >= 0 ? +1 : -1;
  record.raise_l = (inv_sqrt2 * apply(op_a.adjoint(), vac) - l).norm();
  record.lower_l = (inv_sqrt2 * apply(op_a, l) - vac).norm();
  record.raise_b = (signed_inv * apply(op_at.adjoint(), onef) - b).norm();
  record.lower_b = (signed_inv * apply(op_at, b) - onef).norm();
  return record;
}

}  // namespace superfock
