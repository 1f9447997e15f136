// Acceptance suite: every analytic identity the library promises, each run at
// its contractual tolerance with one PASS/FAIL line. Returns the number of
// failed criteria.

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "superfock/superfock.hpp"

namespace {

namespace sf = superfock;
using Cd = std::complex<double>;

int g_failures = 0;

void report(int id, const std::string& title, double residual, double tolerance,
            bool pass_override_used = false, bool pass_override = false) {
  const bool pass = pass_override_used ? pass_override : residual <= tolerance;
  if (!pass) ++g_failures;
  std::printf("[%s] criterion %2d: %-58s residual %10.3e (tol %8.1e)\n",
              pass ? "PASS" : "FAIL", id, title.c_str(), residual, tolerance);
}

sf::SuperState<double> random_state(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto s = sf::zero_state<double>(dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    s.psi0(n) = Cd(gauss(rng), gauss(rng));
    s.psi1(n) = Cd(gauss(rng), gauss(rng));
  }
  return sf::normalized(s);
}

// 1. C(|n,theta,phi>) = sin(theta); C(reference & displaced reference) =
//    sin^2(theta/2) across 181 theta points x {L+-, B+-} x alpha grid, dim 128.
void criterion_concurrence_identities() {
  const Eigen::Index dim = 128;
  const std::vector<Cd> alphas = {Cd(0, 0), Cd(1, 0), Cd(1, 1), Cd(0, 2)};
  const std::vector<sf::BellLabel> labels = {sf::BellLabel::Lplus, sf::BellLabel::Lminus,
                                             sf::BellLabel::Bplus, sf::BellLabel::Bminus};
  double worst = 0;
  for (int i = 0; i <= 180; ++i) {
    const double theta = sf::pi * i / 180.0;
    for (Eigen::Index n : {1, 3}) {
      const double c = sf::concurrence_gram(sf::super_number_state<double>(n, theta, 0.7, dim));
      worst = std::max(worst, std::abs(c - std::sin(theta)));
    }
  }
  for (const auto& alpha : alphas) {
    const auto d = sf::super_displacement(alpha, dim);
    for (auto label : labels) {
      for (int i = 0; i <= 180; ++i) {
        const double theta = sf::pi * i / 180.0;
        const double expected = std::pow(std::sin(theta / 2), 2);
        const auto s =
            sf::apply(d, sf::reference_state_from_theta<double>(label, theta, 0.9, dim));
        worst = std::max(worst, std::abs(sf::concurrence_gram(s) - expected));
      }
    }
  }
  report(1, "concurrence sin(theta) / sin^2(theta/2), alpha-independent", worst, 1e-8);
}

// 2. tr rho_f^2 + C^2/2 = 1 and tr rho_f^2 = tr rho_b^2 on 1000 random states.
// 3. Gram-determinant vs literal minors-sum concurrence on the same set.
void criteria_random_state_identities() {
  const Eigen::Index dim = 64;
  std::mt19937_64 rng(0xacce97);
  double worst_purity = 0, worst_minors = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto s = random_state(dim, rng);
    const double pf = sf::purity_fermion(s);
    const double pb = sf::purity_boson(s);
    const double c = sf::concurrence_gram(s);
    worst_purity = std::max(worst_purity, std::abs(pf + c * c / 2 - 1));
    worst_purity = std::max(worst_purity, std::abs(pf - pb));
    worst_minors = std::max(worst_minors, std::abs(c - sf::concurrence_minors(s, true)));
  }
  report(2, "purity identities on 1000 random states", worst_purity, 1e-10);
  report(3, "Gram vs minors-sum concurrence on the same set", worst_minors, 1e-10);
}

// 4. ||A_partner |alpha,C,phi> - alpha |alpha,C,phi>|| over a 5x5x4 grid for
//    all four families at dim 128.
void criterion_eigenstate_residuals() {
  const Eigen::Index dim = 128;
  const std::vector<double> cs = {0.0, 0.25, 0.5, 0.75, 1.0};
  const std::vector<double> phis = {0.0, sf::pi / 4, 1.9, 3.7, 5.5};
  const std::vector<Cd> alphas = {Cd(0.5, 0), Cd(-1, 0), Cd(1, 1), Cd(0, 2)};
  const std::vector<sf::BellLabel> labels = {sf::BellLabel::Lplus, sf::BellLabel::Lminus,
                                             sf::BellLabel::Bplus, sf::BellLabel::Bminus};
  double worst = 0;
  for (const auto& alpha : alphas) {
    const auto d = sf::super_displacement(alpha, dim);
    const Eigen::Index keep = sf::trusted_dim(dim, alpha);
    for (auto label : labels) {
      const auto op = sf::super_annihilator<double>(sf::partner_annihilator(label), dim);
      for (double c : cs) {
        for (double phi : phis) {
          const auto s = sf::apply(d, sf::reference_state<double>(label, c, phi, dim));
          worst = std::max(worst, sf::projected_eigen_residual(op, s, alpha, keep));
        }
      }
    }
  }
  report(4, "partner annihilator eigenstate residuals (5x5x4 grid)", worst, 1e-8);
}

// 5. Matrix-expectation dispersions match the closed forms independently of
//    alpha; the closed-form Pythagoras residual vanishes.
void criterion_dispersion_theorem() {
  const Eigen::Index dim = 128;
  const std::vector<double> cs = {0.0, 0.25, 0.5, 0.75, 1.0};
  const std::vector<double> phis = {0.0, sf::pi / 4, 1.9, 3.7, 5.5};
  const std::vector<Cd> alphas = {Cd(0.5, 0), Cd(-1, 0), Cd(1, 1), Cd(0, 2)};
  const std::vector<sf::BellLabel> labels = {sf::BellLabel::Lplus, sf::BellLabel::Lminus,
                                             sf::BellLabel::Bplus, sf::BellLabel::Bminus};
  double worst = 0;
  for (const auto& alpha : alphas) {
    const auto d = sf::super_displacement(alpha, dim);
    for (auto label : labels) {
      for (double c : cs) {
        for (double phi : phis) {
          const auto s = sf::apply(d, sf::reference_state<double>(label, c, phi, dim));
          const auto stats = sf::quadrature_stats(s);
          const auto [vx, vp] = sf::dispersion_closed_form(c, phi);
          worst = std::max({worst, std::abs(stats.var_x - vx), std::abs(stats.var_p - vp)});
        }
      }
    }
  }
  report(5, "dispersion theorem, matrix vs closed form across alpha", worst, 1e-8);

  double pythagoras = 0;
  for (int i = 0; i <= 500; ++i) {
    for (int j = 0; j <= 100; ++j) {
      pythagoras = std::max(pythagoras, std::abs(sf::pythagoras_residual(
                                            i / 500.0, j * sf::two_pi / 100.0)));
    }
  }
  report(5, "Pythagoras identity var_x + var_p = 1 + C^2 (closed form)", pythagoras, 1e-12);
}

// 6. Squeezing: grid minimum of (DX)^2 at step 1e-3 equals 7/16 at (1/4, 0)
//    and (1/4, pi), with (DP)^2 = 5/8 there and Hessian determinant 3/4.
void criterion_squeezing() {
  double best = 1e9, best_c = 0, best_phi = 0;
  for (int i = 0; i <= 1000; ++i) {
    const double c = i / 1000.0;
    for (int j = 0; j < 6284; ++j) {
      const double phi = j * 1e-3;
      const double f = sf::variance_surface(c, phi);
      if (f < best) {
        best = f;
        best_c = c;
        best_phi = phi;
      }
    }
  }
  const bool located = std::abs(best_c - 0.25) <= 2e-3 &&
                       (std::abs(best_phi) <= 2e-3 || std::abs(best_phi - sf::pi) <= 2e-3);
  double residual = std::abs(best - 7.0 / 16.0);
  residual = std::max(residual, std::abs(sf::variance_surface(0.25, 0.0) - 7.0 / 16.0));
  residual = std::max(residual, std::abs(sf::variance_surface(0.25, sf::pi) - 7.0 / 16.0));
  residual =
      std::max(residual, std::abs(sf::dispersion_closed_form(0.25, 0.0).second - 5.0 / 8.0));
  report(6, "squeezing minimum 7/16 at (1/4, 0) and (1/4, pi); DP^2 = 5/8",
         located ? residual : 1.0, 1e-6);

  double hessian = 0;
  for (const auto& pt : sf::squeeze_critical_points<double>()) {
    hessian = std::max(hessian, std::abs(pt.hessian_det - 0.75));
  }
  report(6, "Hessian determinant 3/4 at the critical points", hessian, 1e-9);
}

// 7. Fibonacci ladder and the Golden limit.
void criterion_golden() {
  double worst = 0;
  for (int n = 1; n <= 40; ++n) {
    const auto rec = sf::concurrence_sequence(n);
    worst = std::max(worst,
                     std::abs(sf::uncertainty_product(rec.concurrence, sf::pi / 4) -
                              rec.uncertainty));
  }
  report(7, "uncertainty_product(C_n, pi/4) = F(n)/F(n+1), n in [1,40]", worst, 1e-12);

  report(7, "|F(21)/F(20) - phi|", std::abs(sf::concurrence_sequence(20).ratio - sf::golden_ratio()),
         1e-7);

  const double c_inf = sf::golden_concurrence();
  report(7, "golden state closed-form product = 1/phi",
         std::abs((1 + c_inf * c_inf) / 2 - 1 / sf::golden_ratio()), 1e-10);

  const auto s = sf::golden_state(Cd(0.3, 0.2), sf::BellLabel::Lplus, 128);
  report(7, "golden state numeric product = 1/phi",
         std::abs(sf::quadrature_stats(s).product - 1 / sf::golden_ratio()), 1e-8);
}

// 8. Orthogonality geometry at dim 160.
void criterion_orthogonality() {
  const Eigen::Index dim = 160;

  const auto circle = sf::orthogonal_circle(Cd(0.4, 0.1), 8, sf::BellLabel::Lplus, dim);
  report(8, "C = 1 circle |alpha - beta| = sqrt(2) overlaps", circle.max_overlap, 1e-8);

  double antipodal = 0;
  for (double c : {0.25, 0.5, 0.75, 1.0}) {
    antipodal = std::max(antipodal,
                         sf::orthogonal_antipodal_pair(Cd(0.2, -0.4), c, 0.9,
                                                       sf::BellLabel::Lplus, dim)
                             .max_overlap);
  }
  report(8, "antipodal pairs beta = alpha +/- sqrt(2/C) e^{i phi}", antipodal, 1e-8);

  const auto triangle = sf::orthogonal_triangle(Cd(0.1, 0.2), 0.6, sf::BellLabel::Lplus, dim);
  report(8, "equilateral triple pairwise orthogonal", triangle.max_overlap, 1e-8);

  double min_glauber = 1e9;
  for (Cd a : {Cd(0, 0), Cd(1.5, 0), Cd(-1, 1)}) {
    for (Cd b : {Cd(0.5, -0.5), Cd(-1.5, 1.5)}) {
      min_glauber = std::min(min_glauber,
                             std::abs(sf::super_coherent_overlap(sf::BellLabel::Lplus, a, b,
                                                                 0.0, 0.0, dim)));
    }
  }
  report(8, "theta = 0 overlaps strictly positive (min |<.|.>|)", min_glauber, 1e-6, true,
         min_glauber > 1e-6);
}

// 9. Entanglement constant under time evolution: 20 random states, 100 times.
void criterion_time_independence() {
  const Eigen::Index dim = 64;
  std::mt19937_64 rng(0x71e5);
  std::vector<double> times;
  for (int i = 0; i < 100; ++i) times.push_back(20 * sf::pi * i / 99.0);
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    worst = std::max(worst,
                     sf::entanglement_constancy(random_state(dim, rng), 1.3, times)
                         .max_deviation);
  }
  report(9, "time independence of C over 100 times x 20 states", worst, 1e-10);
}

// 10. Mandel Q of the C = 1 family matches (|alpha|^2-1)/(|alpha|^2+1).
void criterion_mandel() {
  const Eigen::Index dim = 128;
  double worst = 0;
  bool signs_ok = true;
  for (double r : {0.5, 1.0, 2.0}) {
    for (auto label : {sf::BellLabel::Lplus, sf::BellLabel::Lminus}) {
      const auto s = sf::super_coherent(label, Cd(r, 0), 1.0, 0.0, dim);
      const double q = sf::mandel_q(s);
      worst = std::max(worst, std::abs(q - (r * r - 1) / (r * r + 1)));
      if (r < 1 && !(q < 0)) signs_ok = false;
      if (r == 1 && !(std::abs(q) <= 1e-8)) signs_ok = false;
    }
  }
  report(10, "Mandel Q = (|a|^2-1)/(|a|^2+1), sub-Poissonian inside the disk",
         signs_ok ? worst : 1.0, 1e-8);
}

// 11. Generic one-superparticle concurrence sin^2(theta/2) sin(theta1).
void criterion_generic_reference() {
  const Eigen::Index dim = 64;
  double worst = 0;
  for (int i = 0; i < 9; ++i) {
    const double theta = sf::pi * i / 8.0;
    for (int j = 0; j < 9; ++j) {
      const double theta1 = sf::pi * j / 8.0;
      const auto s =
          sf::generic_one_superparticle_reference<double>(theta, 0.7, theta1, 2.1, dim);
      const double expected = std::pow(std::sin(theta / 2), 2) * std::sin(theta1);
      worst = std::max(worst, std::abs(sf::concurrence_gram(s) - expected));
    }
  }
  report(11, "generic one-superparticle concurrence on a 9x9 angle grid", worst, 1e-8);
}

// 12. The default verification run passes and flags exactly the two documented
//     formula discrepancies.
void criterion_verification_report() {
  const auto rep = sf::run_verification({});
  const bool flags_ok = rep.flags.size() == 2 && rep.flags[0].id == "matrix_element_D11" &&
                        rep.flags[1].id == "evolution_exponent_bookkeeping";
  double worst = 0;
  int fails = 0;
  for (const auto& c : rep.checks) {
    if (!c.pass) ++fails;
    if (c.category == "identity") worst = std::max(worst, c.residual / c.tolerance);
  }
  report(12, "default verification suite all green (" + std::to_string(rep.checks.size()) +
                 " checks)",
         static_cast<double>(fails), 0.0, true, fails == 0);
  report(12, "exactly the two documented formula discrepancies flagged",
         static_cast<double>(rep.flags.size()), 2.0, true, flags_ok);
}

}  // namespace

int main() {
  criterion_concurrence_identities();
  criteria_random_state_identities();
  criterion_eigenstate_residuals();
  criterion_dispersion_theorem();
  criterion_squeezing();
  criterion_golden();
  criterion_orthogonality();
  criterion_time_independence();
  criterion_mandel();
  criterion_generic_reference();
  criterion_verification_report();

  if (g_failures == 0) {
    std::printf("acceptance: all criteria satisfied\n");
  } else {
    std::printf("acceptance: %d criterion checks FAILED\n", g_failures);
  }
  return g_failures;
}
