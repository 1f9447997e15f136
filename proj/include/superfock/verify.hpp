#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "superfock/entanglement.hpp"
#include "superfock/evolution.hpp"
#include "superfock/fock.hpp"
#include "superfock/golden.hpp"
#include "superfock/observables.hpp"
#include "superfock/orthogonality.hpp"
#include "superfock/superstate.hpp"
#include "superfock/types.hpp"

namespace superfock {

// ---------------------------------------------------------------------------
// Reference exponential: exp(K) v summed term by term. Independent of the
// scaling-and-squaring path used by displacement(). The generator is split
// into 2^s stages with ||K/2^s|| <= 1 so the Taylor terms never grow and the
// partial sums stay cancellation-free.
// ---------------------------------------------------------------------------
template <typename Scalar>
FockVector<Scalar> series_exp_apply(const FockOperator<Scalar>& k, FockVector<Scalar> v) {
  const Scalar inf_norm = k.cwiseAbs().rowwise().sum().maxCoeff();
  Eigen::Index stages = 1;
  while (static_cast<Scalar>(stages) < inf_norm) stages *= 2;
  const FockOperator<Scalar> scaled = k / static_cast<Scalar>(stages);
  for (Eigen::Index stage = 0; stage < stages; ++stage) {
    FockVector<Scalar> term = v;
    FockVector<Scalar> acc = v;
    for (int j = 1; j <= 80; ++j) {
      term = (scaled * term) / static_cast<Scalar>(j);
      acc += term;
      if (term.norm() <= Scalar(1e-20) * std::max(acc.norm(), Scalar(1e-30))) break;
    }
    v = std::move(acc);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Verification suite
// ---------------------------------------------------------------------------

struct VerifyConfig {
  Eigen::Index fock_dim = 128;
  Eigen::Index ortho_dim = 160;
  int random_states = 1000;
  std::uint64_t seed = 0x5eedULL;
  Tolerances tol;
};

struct CheckResult {
  std::string name;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
  // "identity": residual must stay below tolerance.
  // "bound": residual must stay above tolerance (non-degeneracy witness).
  // "truncation": the check could not run because the truncation is too small.
  // "error": the check aborted for another reason.
  std::string category = "identity";
  std::string detail;
};

/// Documented mismatch between a printed formula and the numeric path that
/// the implementation trusts instead.
struct DiscrepancyFlag {
  std::string id;
  std::string description;
  double evidence = 0;
};

struct VerifyReport {
  Eigen::Index fock_dim = 0;
  std::vector<CheckResult> checks;
  std::vector<DiscrepancyFlag> flags;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
  }
  std::vector<CheckResult> failures() const {
    std::vector<CheckResult> out;
    for (const auto& c : checks) {
      if (!c.pass) out.push_back(c);
    }
    return out;
  }
  bool only_truncation_failures() const {
    bool any = false;
    for (const auto& c : checks) {
      if (c.pass) continue;
      any = true;
      if (c.category != "truncation") return false;
    }
    return any;
  }
};

namespace verify_detail {

using C = std::complex<double>;

inline SuperState<double> random_superstate(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  SuperState<double> s = zero_state<double>(dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    s.psi0(n) = C(gauss(rng), gauss(rng));
    s.psi1(n) = C(gauss(rng), gauss(rng));
  }
  return normalized(s);
}

// Trusted block for operator-algebra identities (products of displacements).
// Displacing level j spreads a wavepacket of width ~ r sqrt(2j+1) around
// j + r^2, so the identity survives truncation only below the largest j with
// j + r^2 + 3 r sqrt(2j+1) <= dim. This is deeper than the state-level guard
// of trusted_dim(), which only protects columns built from low Fock levels.
inline Eigen::Index algebra_trusted_block(Eigen::Index dim, double reach) {
  for (Eigen::Index j = dim; j > 0; --j) {
    const double spread = static_cast<double>(j) + reach * reach +
                          3.0 * reach * std::sqrt(2.0 * static_cast<double>(j) + 1.0);
    if (spread <= static_cast<double>(dim)) return j;
  }
  return 0;
}

struct Runner {
  VerifyReport* report;

  void operator()(const std::string& name, double tolerance,
                  const std::function<double()>& body, const std::string& category = "identity",
                  const std::string& detail = "") const {
    CheckResult result;
    result.name = name;
    result.tolerance = tolerance;
    result.category = category;
    result.detail = detail;
    try {
      result.residual = body();
      result.pass = (category == "bound") ? result.residual >= tolerance
                                          : result.residual <= tolerance;
    } catch (const TruncationError& e) {
      result.category = "truncation";
      result.pass = false;
      result.residual = std::numeric_limits<double>::quiet_NaN();
      result.detail = e.what();
    } catch (const Error& e) {
      result.category = "error";
      result.pass = false;
      result.residual = std::numeric_limits<double>::quiet_NaN();
      result.detail = e.what();
    }
    report->checks.push_back(std::move(result));
  }
};

}  // namespace verify_detail

inline VerifyReport run_verification(const VerifyConfig& cfg = {}) {
  using verify_detail::C;
  VerifyReport report;
  report.fock_dim = cfg.fock_dim;
  verify_detail::Runner check{&report};
  const Eigen::Index dim = cfg.fock_dim;
  const Tolerances& tol = cfg.tol;

  const std::vector<C> alphas_large = {C(0.5, 0), C(1, 1), C(0, 2), C(3, 0), C(-1.5, 0.5)};
  const std::vector<C> alphas_small = {C(0.5, 0), C(0, 1), C(-0.7, 0.3)};
  const std::vector<BellLabel> labels = {BellLabel::Lplus, BellLabel::Lminus,
                                         BellLabel::Bplus, BellLabel::Bminus};

  // ---- fock -------------------------------------------------------------
  check("fock/displacement_unitarity", tol.unitary, [&] {
    double worst = 0;
    const auto id = FockOperator<double>::Identity(dim, dim);
    for (const auto& a : alphas_large) {
      const auto d = displacement(a, dim, tol.tail);
      const Eigen::Index td = trusted_dim(dim, a);
      worst = std::max(worst, (d.adjoint() * d - id)
                                  .topLeftCorner(td, td)
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    return worst;
  });

  check("fock/displacement_product_formula", 1e-8, [&] {
    double worst = 0;
    for (const auto& a : alphas_small) {
      for (const auto& b : alphas_small) {
        const auto lhs = FockOperator<double>(displacement(a, dim, tol.tail) *
                                              displacement(b, dim, tol.tail));
        const C phase = std::exp(C(0, (a * std::conj(b)).imag()));
        const auto rhs = FockOperator<double>(phase * displacement(a + b, dim, tol.tail));
        const Eigen::Index td =
            verify_detail::algebra_trusted_block(dim, std::abs(a) + std::abs(b));
        worst = std::max(worst,
                         (lhs - rhs).topLeftCorner(td, td).cwiseAbs().maxCoeff());
      }
    }
    return worst;
  });

  check("fock/displacement_shifts_annihilator", 1e-8, [&] {
    double worst = 0;
    const auto a_op = annihilation<double>(dim);
    const auto id = FockOperator<double>::Identity(dim, dim);
    for (const auto& a : alphas_large) {
      const auto d = displacement(a, dim, tol.tail);
      const auto shifted = FockOperator<double>(d.adjoint() * a_op * d);
      const Eigen::Index td = verify_detail::algebra_trusted_block(dim, std::abs(a));
      worst = std::max(worst, (shifted - a_op - a * id)
                                  .topLeftCorner(td, td)
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    return worst;
  });

  check("fock/displacement_series_oracle", 1e-10, [&] {
    double worst = 0;
    const auto a_op = annihilation<double>(dim);
    for (const auto& a : alphas_small) {
      const auto d = displacement(a, dim, tol.tail);
      const FockOperator<double> gen = a * a_op.adjoint() - std::conj(a) * a_op;
      for (Eigen::Index n : {0, 1, 2, 5}) {
        FockVector<double> basis = FockVector<double>::Zero(dim);
        basis(n) = 1.0;
        worst = std::max(worst, (d.col(n) - series_exp_apply(gen, basis)).norm());
      }
    }
    return worst;
  });

  check("fock/coherent_number_mean", 1e-10, [&] {
    double worst = 0;
    const auto n_op = number_operator<double>(dim);
    for (const auto& a : alphas_large) {
      const auto v = coherent_state(a, dim, tol.tail);
      worst = std::max(worst, std::abs(v.dot(n_op * v).real() - std::norm(a)));
    }
    return worst;
  });

  check("fock/displaced_fock_orthonormality", tol.ortho, [&] {
    double worst = 0;
    for (const auto& a : {C(0.5, 0), C(1, 1), C(0, 2)}) {
      const auto d = displacement(a, dim, tol.tail);
      for (Eigen::Index m = 0; m <= 4; ++m) {
        for (Eigen::Index n = 0; n <= 4; ++n) {
          const double expected = (m == n) ? 1.0 : 0.0;
          worst = std::max(worst, std::abs(std::abs(d.col(m).dot(d.col(n))) - expected));
        }
      }
    }
    return worst;
  });

  check("fock/displaced_fock_completeness", 1e-8, [&] {
    double worst = 0;
    const auto id = FockOperator<double>::Identity(dim, dim);
    for (const auto& a : {C(1, 1), C(0, 2)}) {
      const auto d = displacement(a, dim, tol.tail);
      const Eigen::Index td = trusted_dim(dim, a);
      worst = std::max(worst, (FockOperator<double>(d * d.adjoint()) - id)
                                  .topLeftCorner(td, td)
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    return worst;
  });

  // ---- superstate ---------------------------------------------------------
  check("superstate/bell_orthonormality", 1e-12, [&] {
    // two separate orthonormal families: the four Bell states, and the
    // generalized Bell states <m,s'|n,s> = delta_mn delta_ss' (B+/- overlap
    // the n >= 2 members, which is not claimed anywhere)
    double worst = 0;
    std::vector<SuperState<double>> bells;
    for (auto label : labels) bells.push_back(bell<double>(label, dim));
    for (std::size_t i = 0; i < bells.size(); ++i) {
      for (std::size_t j = 0; j < bells.size(); ++j) {
        const double expected = (i == j) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(std::abs(inner(bells[i], bells[j])) - expected));
      }
    }
    std::vector<SuperState<double>> family;
    for (Eigen::Index n = 1; n <= 5; ++n) {
      family.push_back(generalized_bell<double>(n, +1, dim));
      family.push_back(generalized_bell<double>(n, -1, dim));
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = 0; j < family.size(); ++j) {
        const double expected = (i == j) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(std::abs(inner(family[i], family[j])) - expected));
      }
    }
    return worst;
  });

  check("superstate/supernumber_eigenstates", 1e-12, [&] {
    double worst = 0;
    const auto n_op = super_number_operator<double>(dim);
    worst = std::max(worst, (apply(n_op, bell<double>(BellLabel::Lplus, dim)) -
                             C(1, 0) * bell<double>(BellLabel::Lplus, dim))
                                .norm());
    worst = std::max(worst, (apply(n_op, bell<double>(BellLabel::Lminus, dim)) -
                             C(1, 0) * bell<double>(BellLabel::Lminus, dim))
                                .norm());
    for (Eigen::Index n = 1; n <= 5; ++n) {
      const auto gb = generalized_bell<double>(n, +1, dim);
      worst = std::max(worst, (apply(n_op, gb) - C(double(n), 0) * gb).norm());
      const auto sns = super_number_state<double>(n, 1.1, 0.4, dim);
      worst = std::max(worst, (apply(n_op, sns) - C(double(n), 0) * sns).norm());
    }
    return worst;
  });

  check("superstate/vacuum_one_fermion_annihilated", 1e-14, [&] {
    double worst = 0;
    const auto vac = vacuum<double>(dim);
    const auto onef = one_fermion<double>(dim);
    for (auto kind : {AnnihilatorKind::A1, AnnihilatorKind::Am1}) {
      worst = std::max(worst, apply(super_annihilator<double>(kind, dim), vac).norm());
    }
    for (auto kind : {AnnihilatorKind::AT1, AnnihilatorKind::ATm1}) {
      worst = std::max(worst, apply(super_annihilator<double>(kind, dim), onef).norm());
    }
    return worst;
  });

  check("superstate/raising_identities", tol.eig, [&] {
    return std::max(raise_to_bell<double>(+1, dim).max_residual(),
                    raise_to_bell<double>(-1, dim).max_residual());
  });

  check("superstate/gate_algebra", 1e-12, [&] {
    double worst = 0;
    const auto a1 = super_annihilator<double>(AnnihilatorKind::A1, dim);
    const auto am1 = super_annihilator<double>(AnnihilatorKind::Am1, dim);
    const auto at1 = super_annihilator<double>(AnnihilatorKind::AT1, dim);
    const auto atm1 = super_annihilator<double>(AnnihilatorKind::ATm1, dim);
    const auto lp = bell<double>(BellLabel::Lplus, dim);
    const auto lm = bell<double>(BellLabel::Lminus, dim);
    const auto bp = bell<double>(BellLabel::Bplus, dim);
    const auto bm = bell<double>(BellLabel::Bminus, dim);
    worst = std::max(worst, apply(a1, lm).norm());
    worst = std::max(worst, apply(am1, lp).norm());
    worst = std::max(worst, apply(at1, bm).norm());
    worst = std::max(worst, apply(atm1, bp).norm());
    worst = std::max(worst, (apply(a1, bp) - C(1, 0) * lp).norm());
    worst = std::max(worst, (apply(a1, bm) - C(-1, 0) * lp).norm());
    worst = std::max(worst, (apply(am1, bp) - C(-1, 0) * lm).norm());
    worst = std::max(worst, (apply(am1, bm) - C(1, 0) * lm).norm());
    worst = std::max(worst, (apply(at1, lp) - C(1, 0) * bp).norm());
    worst = std::max(worst, (apply(at1, lm) - C(1, 0) * bp).norm());
    worst = std::max(worst, (apply(atm1, lp) - C(1, 0) * bm).norm());
    worst = std::max(worst, (apply(atm1, lm) - C(1, 0) * bm).norm());
    return worst;
  });

  check("superstate/a0_eigenvalue_separable", tol.eig, [&] {
    double worst = 0;
    const auto a0 = super_annihilator<double>(AnnihilatorKind::A0, dim);
    const std::vector<std::pair<C, C>> qubits = {{C(1, 0), C(0, 0)},
                                                 {C(0, 0), C(1, 0)},
                                                 {C(0.6, 0), C(0, 0.8)},
                                                 {C(0.36, 0.48), C(0.8, 0)}};
    for (const auto& a : alphas_small) {
      const auto d = super_displacement(a, dim, tol.tail);
      for (const auto& [c0, c1] : qubits) {
        const auto s = apply(d, c0 * vacuum<double>(dim) + c1 * one_fermion<double>(dim));
        worst = std::max(worst, projected_eigen_residual(
                                    a0, s, a, trusted_dim(dim, a)));
      }
    }
    return worst;
  }, "identity", "A0 D(alpha)(c0 vac + c1 one_fermion) = alpha (...) for separable states");

  check("superstate/a0_entangled_residual", 0.05, [&] {
    double floor = std::numeric_limits<double>::infinity();
    const auto a0 = super_annihilator<double>(AnnihilatorKind::A0, dim);
    for (double c : {0.25, 0.5, 0.75, 1.0}) {
      for (auto label : {BellLabel::Lplus, BellLabel::Lminus}) {
        const auto s = reference_state<double>(label, c, 0.4, dim);
        const auto image = apply(a0, s);
        const C projection = inner(s, image);
        floor = std::min(floor, (image - projection * s).norm());
      }
    }
    return floor;
  }, "bound", "entangled references are not annihilated by the pure bosonic A0");

  check("superstate/eigenfamily_residuals", tol.eig, [&] {
    double worst = 0;
    for (const auto& a : alphas_small) {
      const auto d = super_displacement(a, dim, tol.tail);
      const Eigen::Index keep = trusted_dim(dim, a);
      for (auto label : labels) {
        const auto op = super_annihilator<double>(partner_annihilator(label), dim);
        for (double c : {0.0, 0.3, 0.7, 1.0}) {
          for (double phi : {0.0, 1.2, 4.4}) {
            const auto s = apply(d, reference_state<double>(label, c, phi, dim));
            worst = std::max(worst,
                             projected_eigen_residual(op, s, a, keep));
          }
        }
      }
    }
    return worst;
  });

  // ---- entanglement -------------------------------------------------------
  {
    std::mt19937_64 rng(cfg.seed);
    std::vector<SuperState<double>> randoms;
    randoms.reserve(cfg.random_states);
    for (int i = 0; i < cfg.random_states; ++i) {
      randoms.push_back(verify_detail::random_superstate(dim, rng));
    }

    check("entanglement/purity_equality", 1e-10, [&] {
      double worst = 0;
      for (const auto& s : randoms) {
        worst = std::max(worst, std::abs(purity_fermion(s) - purity_boson(s)));
      }
      return worst;
    });

    check("entanglement/concurrence_purity_identity", 1e-10, [&] {
      double worst = 0;
      for (const auto& s : randoms) {
        const double c = concurrence_gram(s);
        worst = std::max(worst, std::abs(purity_fermion(s) + c * c / 2 - 1));
      }
      return worst;
    });

    check("entanglement/gram_vs_minors", 1e-10, [&] {
      double worst = 0;
      for (const auto& s : randoms) {
        worst = std::max(worst,
                         std::abs(concurrence_gram(s) - concurrence_minors(s, true)));
      }
      return worst;
    });

    check("entanglement/concurrence_range_and_bell", tol.cmp, [&] {
      double worst = 0;
      for (const auto& s : randoms) {
        const double c = concurrence_gram(s);
        worst = std::max(worst, std::max(-c, c - 1.0));
      }
      for (auto label : labels) {
        worst = std::max(worst, std::abs(concurrence_gram(bell<double>(label, dim)) - 1));
      }
      for (Eigen::Index n = 1; n <= 5; ++n) {
        worst = std::max(worst,
                         std::abs(concurrence_gram(generalized_bell<double>(n, -1, dim)) - 1));
      }
      return std::max(worst, 0.0);
    });
  }

  check("entanglement/entropy_closed_vs_eigen", 1e-10, [&] {
    double worst = 0;
    const Eigen::Index small_dim = 8;
    for (int i = 0; i < 1000; ++i) {
      const double c = static_cast<double>(i) / 999.0;
      const auto s = reference_state<double>(BellLabel::Lplus, c, 0.7, small_dim);
      const auto rho = reduced_fermion(s);
      Eigen::SelfAdjointEigenSolver<ReducedFermion<double>> solver(rho);
      double direct = 0;
      for (double lambda : {solver.eigenvalues()(0), solver.eigenvalues()(1)}) {
        if (lambda > 0) direct -= lambda * std::log2(lambda);
      }
      worst = std::max(worst, std::abs(direct - entropy_bits(s)));
    }
    return worst;
  });

  check("entanglement/displacement_invariance", tol.cmp, [&] {
    const std::vector<C> grid = {C(0.3, 0), C(0, 1), C(1, 1), C(-2, 0.5)};
    double worst = displacement_invariance_check(
                       reference_state<double>(BellLabel::Lplus, 0.3, 1.0, dim), grid,
                       tol.tail)
                       .max_deviation;
    worst = std::max(worst, displacement_invariance_check(
                                bell<double>(BellLabel::Bminus, dim),
                                std::vector<C>{C(2, 0)}, tol.tail)
                                .max_deviation);
    worst = std::max(
        worst, displacement_invariance_check(vacuum<double>(dim), grid, tol.tail)
                   .max_deviation);
    return worst;
  });

  // ---- observables ----------------------------------------------------------
  const std::vector<double> c_grid = {0.0, 0.25, 0.5, 0.75, 1.0};
  const std::vector<double> phi_grid = {0.0, pi / 4, pi / 2, 2.2};

  check("observables/dispersion_matrix_vs_closed", 1e-8, [&] {
    double worst = 0;
    for (const auto& a : alphas_small) {
      const auto d = super_displacement(a, dim, tol.tail);
      for (auto label : labels) {
        for (double c : c_grid) {
          for (double phi : phi_grid) {
            const auto s = apply(d, reference_state<double>(label, c, phi, dim));
            const auto stats = quadrature_stats(s, tol.norm, tol.tail);
            const auto [vx, vp] = dispersion_closed_form(c, phi);
            worst = std::max({worst, std::abs(stats.var_x - vx), std::abs(stats.var_p - vp)});
          }
        }
      }
    }
    return worst;
  });

  check("observables/means_matrix_vs_closed", 1e-8, [&] {
    double worst = 0;
    for (const auto& a : alphas_small) {
      const auto d = super_displacement(a, dim, tol.tail);
      for (auto label : labels) {
        for (double c : c_grid) {
          for (double phi : phi_grid) {
            const auto s = apply(d, reference_state<double>(label, c, phi, dim));
            const auto stats = quadrature_stats(s, tol.norm, tol.tail);
            const auto [mx, mp] = mean_closed_form(a, c, phi, label);
            worst = std::max({worst, std::abs(stats.mean_x - mx), std::abs(stats.mean_p - mp)});
          }
        }
      }
    }
    return worst;
  }, "identity", "includes the B- sign flip of both quadrature means");

  check("observables/pythagoras", 1e-12, [&] {
    double worst = 0;
    for (int i = 0; i <= 100; ++i) {
      for (int j = 0; j <= 100; ++j) {
        worst = std::max(worst, std::abs(pythagoras_residual(i / 100.0, j * two_pi / 100.0)));
      }
    }
    return worst;
  });

  check("observables/uncertainty_monotonic_in_c", 1e-15, [&] {
    double worst_drop = 0;
    for (double phi : {0.0, 0.7, pi / 4}) {
      double prev = uncertainty_product(0.0, phi);
      for (int i = 1; i < 10000; ++i) {
        const double cur = uncertainty_product(i / 9999.0, phi);
        worst_drop = std::max(worst_drop, prev - cur);
        prev = cur;
      }
    }
    return worst_drop;
  });

  check("observables/uncertainty_bounds", 1e-12, [&] {
    double worst = 0;
    for (int i = 0; i <= 200; ++i) {
      const double c = i / 200.0;
      const double lo = 0.5 * std::sqrt(1 + c * c + 2 * c * c * c);
      const double hi = 0.5 * (1 + c * c);
      for (int j = 0; j <= 200; ++j) {
        const double p = uncertainty_product(c, j * two_pi / 200.0);
        worst = std::max({worst, lo - p, p - hi});
      }
    }
    return std::max(worst, 0.0);
  });

  check("observables/variance_bounds", 1e-12, [&] {
    double worst = 0;
    for (int i = 0; i <= 200; ++i) {
      const double c = i / 200.0;
      const double lo = 0.5 * (1 - c + 2 * c * c);
      const double hi = 0.5 * (1 + c);
      for (int j = 0; j <= 200; ++j) {
        const auto [vx, vp] = dispersion_closed_form(c, j * two_pi / 200.0);
        worst = std::max({worst, lo - vx, vx - hi, lo - vp, vp - hi});
      }
    }
    return std::max(worst, 0.0);
  });

  check("observables/bminus_sign_flip", 1e-10, [&] {
    double worst = 0;
    for (double c : {0.3, 0.6}) {
      for (double phi : {0.5, 2.0}) {
        const auto plus = quadrature_stats(
            reference_state<double>(BellLabel::Bplus, c, phi, dim), tol.norm, tol.tail);
        const auto minus = quadrature_stats(
            reference_state<double>(BellLabel::Bminus, c, phi, dim), tol.norm, tol.tail);
        worst = std::max({worst, std::abs(plus.mean_x + minus.mean_x),
                          std::abs(plus.mean_p + minus.mean_p),
                          std::abs(plus.var_x - minus.var_x),
                          std::abs(plus.var_p - minus.var_p)});
      }
    }
    return worst;
  }, "identity", "B- flips the sign of the means only, never the dispersions");

  check("observables/vanishing_mean_alpha", 1e-8, [&] {
    double worst = 0;
    for (double c : {0.0, 0.5, 0.8}) {
      for (double phi : {0.0, 1.3}) {
        const C a = vanishing_mean_alpha(c, phi);
        const auto s = super_coherent(BellLabel::Lplus, a, c, phi, dim, tol.tail);
        const auto stats = quadrature_stats(s, tol.norm, tol.tail);
        worst = std::max({worst, std::abs(stats.mean_x), std::abs(stats.mean_p)});
      }
    }
    return worst;
  });

  check("observables/squeeze_minimum_grid", 1e-6, [&] {
    double best = std::numeric_limits<double>::infinity();
    double best_c = 0, best_phi = 0;
    for (int i = 0; i <= 1000; ++i) {
      const double c = i / 1000.0;
      for (int j = 0; j < 6284; ++j) {
        const double phi = j * 1e-3;
        const double f = variance_surface(c, phi);
        if (f < best) {
          best = f;
          best_c = c;
          best_phi = phi;
        }
      }
    }
    const bool at_critical = std::abs(best_c - 0.25) <= 2e-3 &&
                             (std::abs(best_phi) <= 2e-3 || std::abs(best_phi - pi) <= 2e-3);
    if (!at_critical) return 1.0;
    double residual = std::abs(best - 7.0 / 16.0);
    residual = std::max(residual, std::abs(dispersion_closed_form(0.25, 0.0).second - 5.0 / 8.0));
    return residual;
  }, "identity", "global minimum 7/16 at (C, phi) = (1/4, 0) and (1/4, pi), with (DP)^2 = 5/8 there");

  check("observables/squeeze_hessian", 1e-9, [&] {
    double worst = 0;
    for (const auto& pt : squeeze_critical_points<double>()) {
      worst = std::max(worst, std::abs(pt.hessian_det - 0.75));
    }
    return worst;
  });

  check("observables/mandel_q_family", 1e-8, [&] {
    double worst = 0;
    for (double r : {0.5, 1.0, 2.0}) {
      for (auto label : {BellLabel::Lplus, BellLabel::Lminus}) {
        const auto s = super_coherent(label, C(r, 0), 1.0, 0.0, dim, tol.tail);
        const double q = mandel_q(s, tol.norm, tol.tail, tol.cmp);
        const double expected = (r * r - 1) / (r * r + 1);
        worst = std::max(worst, std::abs(q - expected));
      }
    }
    return worst;
  });

  // ---- evolution ------------------------------------------------------------
  {
    std::mt19937_64 rng(cfg.seed + 1);
    std::vector<SuperState<double>> randoms;
    for (int i = 0; i < 20; ++i) {
      randoms.push_back(verify_detail::random_superstate(dim, rng));
    }
    std::vector<double> times;
    for (int i = 0; i < 100; ++i) times.push_back(20 * pi * i / 99.0);

    check("evolution/norm_preserved", 1e-13, [&] {
      double worst = 0;
      for (const auto& s : randoms) {
        worst = std::max(worst, std::abs(evolve(s, {1.7, 3.9}).norm() - 1.0));
      }
      return worst;
    });

    check("evolution/group_law", 1e-12, [&] {
      double worst = 0;
      for (const auto& s : randoms) {
        const auto two_step = evolve(evolve(s, {1.3, 0.8}), {1.3, 2.9});
        worst = std::max(worst, (two_step - evolve(s, {1.3, 3.7})).norm());
      }
      return worst;
    });

    check("evolution/entanglement_constancy_reference", 1e-10, [&] {
      double worst = entanglement_constancy(
                         reference_state<double>(BellLabel::Lplus, 0.7, 0.3, dim), 1.0, times)
                         .max_deviation;
      for (const auto& s : randoms) {
        worst = std::max(worst, entanglement_constancy(s, 1.0, times).max_deviation);
      }
      worst = std::max(worst,
                       entanglement_constancy(vacuum<double>(dim), 1.0, times).max_deviation);
      return worst;
    });

    check("evolution/entanglement_constancy_supercoherent", 1e-8, [&] {
      const auto s = super_coherent(BellLabel::Bminus, C(1, 1), 0.4, 1.2, dim, tol.tail);
      return entanglement_constancy(s, 1.0, times).max_deviation;
    });

    check("evolution/gram_determinant_phase_invariance", 1e-12, [&] {
      double worst = 0;
      for (const auto& s : randoms) {
        const double base = std::abs(verify_detail::C(
            s.psi0.squaredNorm() * s.psi1.squaredNorm() - std::norm(s.psi0.dot(s.psi1)), 0));
        for (double t : {0.3, 1.7, 9.2}) {
          const auto st = evolve(s, {1.0, t});
          // the off-diagonal phase e^{+/- i w t} cancels inside |det|
          const double det_t = st.psi0.squaredNorm() * st.psi1.squaredNorm() -
                               std::norm(st.psi0.dot(st.psi1));
          worst = std::max(worst, std::abs(det_t - base));
        }
      }
      return worst;
    });
  }

  // ---- orthogonality ---------------------------------------------------------
  const Eigen::Index odim = cfg.ortho_dim;

  check("orthogonality/closed_vs_numeric", 1e-8, [&] {
    double worst = 0;
    const std::vector<double> coords = {-1.5, 0.0, 1.5};
    std::vector<C> points;
    for (double x : coords) {
      for (double y : coords) points.emplace_back(x, y);
    }
    std::vector<FockOperator<double>> cached;
    cached.reserve(points.size());
    for (const auto& p : points) cached.push_back(displacement(p, odim, tol.tail));
    const std::vector<double> thetas = {0.0, pi / 4, pi / 2, 3 * pi / 4, pi};
    const std::vector<double> phis = {0.0, pi / 4, pi / 2, 3 * pi / 4};
    for (double theta : thetas) {
      const double c = std::pow(std::sin(theta / 2), 2);
      for (double phi : phis) {
        const auto ref = reference_state<double>(BellLabel::Lminus, c, phi, odim);
        std::vector<SuperState<double>> states;
        states.reserve(points.size());
        for (const auto& d : cached) {
          states.push_back(SuperState<double>{d * ref.psi0, d * ref.psi1});
        }
        for (std::size_t i = 0; i < points.size(); ++i) {
          for (std::size_t j = 0; j < points.size(); ++j) {
            const C numeric = inner(states[j], states[i]);
            const C closed = inner_product_closed_form(points[i], points[j], theta, phi,
                                                       BellLabel::Lminus);
            worst = std::max(worst, std::abs(numeric - closed));
          }
        }
      }
    }
    return worst;
  });

  check("orthogonality/antipodal_pairs", tol.ortho, [&] {
    double worst = 0;
    for (double c : {0.25, 0.5, 0.75, 1.0}) {
      for (const auto& base : {C(0, 0), C(0.5, -0.3)}) {
        for (double phi : {0.0, 1.1}) {
          worst = std::max(worst,
                           orthogonal_antipodal_pair(base, c, phi, BellLabel::Lplus, odim)
                               .max_overlap);
        }
      }
    }
    return worst;
  });

  check("orthogonality/circle", tol.ortho, [&] {
    double worst = 0;
    for (const auto& base : {C(0, 0), C(0.5, 0.5)}) {
      worst = std::max(worst,
                       orthogonal_circle(base, 8, BellLabel::Lplus, odim).max_overlap);
    }
    return worst;
  });

  check("orthogonality/triangle", tol.ortho, [&] {
    double worst = 0;
    for (double t1 : {0.0, 0.9}) {
      worst = std::max(worst,
                       orthogonal_triangle(C(0.2, 0.1), t1, BellLabel::Lplus, odim)
                           .max_overlap);
    }
    return worst;
  });

  check("orthogonality/condition_substitution", 1e-12, [&] {
    double worst = 0;
    for (double theta : {0.4, pi / 2, 2.4, pi}) {
      const double s_half = std::sin(theta / 2);
      for (double sign : {1.0, -1.0}) {
        const C w(sign * std::sqrt(2.0) / s_half, 0);  // real solution branch
        worst = std::max(worst, std::abs((w - std::conj(w)) * std::sin(theta)));
        worst = std::max(worst, std::abs(0.5 * std::norm(w) * s_half * s_half - 1.0));
      }
    }
    return worst;
  }, "identity", "antipodal solutions satisfy (w - conj w) sin theta = 0 and |w|^2 sin^2(theta/2)/2 = 1");

  check("orthogonality/glauber_never_zero", 1e-6, [&] {
    double floor = std::numeric_limits<double>::infinity();
    const std::vector<C> points = {C(0, 0), C(1.5, 0), C(-1.5, 1.5), C(0, -1.5)};
    for (const auto& a : points) {
      for (const auto& b : points) {
        floor = std::min(floor,
                         std::abs(inner_product_closed_form(a, b, 0.0, 0.0, BellLabel::Lplus)));
      }
    }
    return floor;
  }, "bound", "theta = 0 overlaps stay strictly positive (Glauber states never orthogonal)");

  check("orthogonality/b_family_same_conditions", tol.ortho, [&] {
    double worst = 0;
    for (auto label : {BellLabel::Bplus, BellLabel::Bminus}) {
      for (double c : {0.5, 1.0}) {
        worst = std::max(worst,
                         orthogonal_antipodal_pair(C(0.3, 0.2), c, 0.7, label, odim)
                             .max_overlap);
      }
      worst = std::max(worst, orthogonal_circle(C(0, 0), 6, label, odim).max_overlap);
    }
    return worst;
  });

  // ---- golden -----------------------------------------------------------------
  check("golden/product_identity", 1e-12, [&] {
    double worst = 0;
    for (int n = 1; n <= 40; ++n) {
      const auto rec = concurrence_sequence(n);
      worst = std::max(worst,
                       std::abs(uncertainty_product(rec.concurrence, pi / 4) - rec.uncertainty));
    }
    return worst;
  });

  check("golden/rational_identity", 0.0, [&] {
    // C_n^2 + 1 = 2 F(n)/F(n+1) <=> F(n-2) + F(n+1) = 2 F(n), exact in integers
    const auto fib = fibonacci(90);
    std::int64_t worst = 0;
    for (int n = 1; n <= 88; ++n) {
      worst = std::max(worst, std::abs(fib.at(n - 2) + fib.at(n + 1) - 2 * fib.at(n)));
    }
    return static_cast<double>(worst);
  });

  check("golden/convergence", 1e-7, [&] {
    const auto report_limits = golden_limits(20);
    double prev_even = 1e9, prev_odd = 1e9;
    for (const auto& row : report_limits.rows) {
      double& prev = (row.n % 2 == 0) ? prev_even : prev_odd;
      if (row.ratio_gap > prev) return 1.0;  // even/odd subsequences must shrink
      prev = row.ratio_gap;
    }
    return std::abs(concurrence_sequence(20).ratio - golden_ratio());
  }, "identity", "|F(21)/F(20) - phi| and monotone even/odd convergence");

  check("golden/golden_state_products", 1e-8, [&] {
    const double c_inf = golden_concurrence();
    const double closed = (1 + c_inf * c_inf) / 2;
    double worst = std::abs(closed - 1 / golden_ratio()) * 1e2;  // 1e-10 budget
    const auto s = golden_state(C(0.6, 0.4), BellLabel::Lplus, dim, tol.tail);
    const auto stats = quadrature_stats(s, tol.norm, tol.tail);
    worst = std::max(worst, std::abs(stats.product - 1 / golden_ratio()));
    worst = std::max(worst, std::abs(concurrence_gram(s) - c_inf));
    return worst;
  });

  // ---- documented formula discrepancies ----------------------------------------
  {
    const C a(0.7, 0.3);
    const auto d = displacement(a, dim, tol.tail);
    const C numeric = d(1, 1);
    const C printed = (1.0 - std::norm(a)) * a * std::exp(-std::norm(a) / 2);
    const C corrected = (1.0 - std::norm(a)) * std::exp(-std::norm(a) / 2);
    DiscrepancyFlag flag;
    flag.id = "matrix_element_D11";
    flag.evidence = std::abs(numeric - printed);
    flag.description =
        "printed <1|D(alpha)|1> = (1-|alpha|^2) alpha e^{-|alpha|^2/2} disagrees with the "
        "series oracle, which gives (1-|alpha|^2) e^{-|alpha|^2/2} (no extra alpha factor); "
        "oracle residual " +
        std::to_string(std::abs(numeric - corrected)) + ", printed-formula residual " +
        std::to_string(flag.evidence) + "; the numeric path is authoritative";
    report.flags.push_back(std::move(flag));
  }
  {
    const double omega = 2.0, t = 0.3;
    const double literal = std::abs(std::exp(C(0, -omega * omega * t)) -
                                    std::exp(C(0, -omega * t)));
    DiscrepancyFlag flag;
    flag.id = "evolution_exponent_bookkeeping";
    flag.evidence = literal;
    flag.description =
        "U(t) = e^{-i omega H t} with H = omega N double-counts omega; the displayed block "
        "matrix diag(e^{-i omega t N}, e^{-i omega t (N+1)}) is the operative definition and "
        "is what evolve() implements; literal-reading phase mismatch at (omega=2, t=0.3): " +
        std::to_string(literal);
    report.flags.push_back(std::move(flag));
  }

  return report;
}

}  // namespace superfock
