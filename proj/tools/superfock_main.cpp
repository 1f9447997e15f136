// superfock command line front end: figure data emission, verification suite,
// single-state inspection and the Fibonacci/Golden uncertainty table.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
//             3 truncation error, 4 I/O error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "superfock/superfock.hpp"

namespace {

namespace sf = superfock;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTruncation = 3;
constexpr int kExitIo = 4;

std::filesystem::path output_dir() {
  if (const char* dir = std::getenv("SUPERFOCK_OUTPUT_DIR")) {
    return std::filesystem::path(dir);
  }
  return std::filesystem::current_path();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  out << contents;
  out.flush();
  if (!out.good()) {
    throw std::ios_base::failure("cannot write " + path.string());
  }
}

std::complex<double> parse_alpha(const std::string& text) {
  double re = 0, im = 0;
  char extra = 0;
  const int matched = std::sscanf(text.c_str(), "%lf,%lf%c", &re, &im, &extra);
  if (matched != 2) {
    throw CLI::ValidationError("--alpha", "expected RE,IM (e.g. 0.5,-1.0)");
  }
  return {re, im};
}

sf::Tolerances parse_tolerances(const std::vector<std::string>& entries) {
  sf::Tolerances tol;
  for (const auto& entry : entries) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--tol", "expected NAME=VALUE, got '" + entry + "'");
    }
    const std::string name = entry.substr(0, eq);
    const double value = std::strtod(entry.c_str() + eq + 1, nullptr);
    if (!(value > 0)) {
      throw CLI::ValidationError("--tol", "tolerance '" + name + "' must be positive");
    }
    if (name == "norm_tol") tol.norm = value;
    else if (name == "tail_tol") tol.tail = value;
    else if (name == "ortho_tol") tol.ortho = value;
    else if (name == "unitary_tol") tol.unitary = value;
    else if (name == "cmp_tol") tol.cmp = value;
    else if (name == "eig_tol") tol.eig = value;
    else throw CLI::ValidationError("--tol", "unknown tolerance '" + name + "'");
  }
  return tol;
}

sf::BellLabel parse_label(const std::string& name) {
  if (name == "Lplus") return sf::BellLabel::Lplus;
  if (name == "Lminus") return sf::BellLabel::Lminus;
  if (name == "Bplus") return sf::BellLabel::Bplus;
  return sf::BellLabel::Bminus;
}

// ---------------------------------------------------------------------------
// figure
// ---------------------------------------------------------------------------

struct FigureArgs {
  int id = 0;
  std::string out;
  std::string format = "csv";
  sf::FigureConfig grid;
};

int run_figure(const FigureArgs& args) {
  const auto table = sf::figure_table(args.id, args.grid);
  std::ostringstream body;
  if (args.format == "csv") {
    sf::write_csv(table, body);
  } else {
    sf::write_json(table, body);
  }
  const std::filesystem::path path =
      args.out.empty()
          ? output_dir() / ("figure_" + std::to_string(args.id) + "." + args.format)
          : std::filesystem::path(args.out);
  write_file(path, body.str());
  std::cout << path.string() << ": " << table.rows.size() << " rows\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
  sf::VerifyConfig config;
  std::string out;
};

json report_to_json(const sf::VerifyReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"residual", c.residual},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass},
                      {"category", c.category},
                      {"detail", c.detail}});
  }
  json flags = json::array();
  for (const auto& f : report.flags) {
    flags.push_back({{"id", f.id}, {"description", f.description}, {"evidence", f.evidence}});
  }
  return {{"fock_dim", report.fock_dim},
          {"all_pass", report.all_pass()},
          {"checks", checks},
          {"flags", flags}};
}

int run_verify(const VerifyArgs& args) {
  const auto report = sf::run_verification(args.config);
  for (const auto& c : report.checks) {
    const std::string note = c.category == "identity" ? "" : "  (" + c.category + ")";
    std::printf("[%s] %-55s residual %11.4e  tol %9.2e%s\n", c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.residual, c.tolerance, note.c_str());
  }
  for (const auto& f : report.flags) {
    std::printf("[FLAG] %s: %s\n", f.id.c_str(), f.description.c_str());
  }
  const std::filesystem::path path = args.out.empty()
                                         ? output_dir() / "verify_report.json"
                                         : std::filesystem::path(args.out);
  write_file(path, report_to_json(report).dump(2) + "\n");
  const auto failures = report.failures();
  std::printf("%zu/%zu checks passed, %zu flags, report: %s\n",
              report.checks.size() - failures.size(), report.checks.size(),
              report.flags.size(), path.string().c_str());
  if (report.all_pass()) return kExitOk;
  return report.only_truncation_failures() ? kExitTruncation : kExitVerifyFailure;
}

// ---------------------------------------------------------------------------
// state
// ---------------------------------------------------------------------------

struct StateArgs {
  std::string label = "Lplus";
  std::string alpha_text = "0,0";
  std::optional<double> concurrence;
  std::optional<double> theta;
  double phi = 0;
  Eigen::Index fock_dim = 128;
  std::string out;
};

int run_state(const StateArgs& args) {
  const sf::BellLabel label = parse_label(args.label);
  const std::complex<double> alpha = parse_alpha(args.alpha_text);
  double c = 0;
  if (args.concurrence) {
    c = *args.concurrence;
  } else {
    const double s = std::sin(*args.theta / 2);
    c = s * s;
  }
  const Eigen::Index dim = std::max(args.fock_dim, sf::default_dim(alpha));
  const auto state = sf::super_coherent(label, alpha, c, args.phi, dim);
  const auto report = sf::entanglement_report(state);
  const auto stats = sf::quadrature_stats(state);

  json out;
  out["label"] = args.label;
  out["alpha"] = {{"re", alpha.real()}, {"im", alpha.imag()}};
  out["concurrence"] = c;
  out["theta"] = 2 * std::asin(std::sqrt(c));
  out["phi"] = sf::wrap_angle(args.phi);
  out["fock_dim"] = dim;
  out["concurrence_gram"] = report.concurrence_gram;
  out["concurrence_minors"] = report.concurrence_minors;
  out["entropy_bits"] = report.entropy_bits;
  out["purity_fermion"] = report.purity_f;
  out["purity_boson"] = report.purity_b;
  out["quadratures"] = {{"mean_x", stats.mean_x},
                        {"mean_p", stats.mean_p},
                        {"var_x", stats.var_x},
                        {"var_p", stats.var_p},
                        {"product", stats.product}};
  try {
    out["mandel_q"] = sf::mandel_q(state);
  } catch (const sf::UndefinedMomentError&) {
    out["mandel_q"] = nullptr;
  }

  const auto partner = sf::partner_annihilator(label);
  out["annihilator"] = {
      {"kind", sf::to_string(partner)},
      {"eigen_residual",
       sf::projected_eigen_residual(sf::super_annihilator<double>(partner, dim),
                                                   state, alpha, sf::trusted_dim(dim, alpha))}};

  if (c > 0) {
    const auto pair = sf::orthogonal_antipodal_pair(alpha, c, args.phi, label);
    out["orthogonal_partners"] = {
        {"beta_plus", {{"re", pair.members[0].real()}, {"im", pair.members[0].imag()}}},
        {"beta_minus", {{"re", pair.members[1].real()}, {"im", pair.members[1].imag()}}},
        {"max_overlap", pair.max_overlap},
        {"verify_dim", pair.verify_dim}};
  } else {
    out["orthogonal_partners"] = nullptr;  // separable: partners move to infinity
  }

  const std::string text = out.dump(2) + "\n";
  if (args.out.empty()) {
    std::cout << text;
  } else {
    write_file(args.out, text);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// golden
// ---------------------------------------------------------------------------

struct GoldenArgs {
  int n_max = 20;
  std::string format = "table";
  std::string out;
};

int run_golden(const GoldenArgs& args) {
  if (args.n_max > 90) {
    throw sf::OverflowError("golden: --n-max must be <= 90 for exact integers");
  }
  sf::DataTable table;
  table.columns = {"n", "concurrence", "uncertainty", "ratio", "ratio_gap"};
  const double phi_ratio = sf::golden_ratio();
  for (int n = 1; n <= args.n_max; ++n) {
    const auto rec = sf::concurrence_sequence(n);
    table.rows.push_back({static_cast<double>(n), rec.concurrence, rec.uncertainty, rec.ratio,
                          std::abs(rec.ratio - phi_ratio)});
  }
  const auto limits = sf::golden_limits(std::max(args.n_max, 10));

  if (args.format == "table") {
    std::printf("%4s %20s %20s %20s %14s\n", "n", "C_n", "dX*dP", "F(n+1)/F(n)",
                "|ratio-phi|");
    for (const auto& row : table.rows) {
      std::printf("%4d %20.15f %20.15f %20.15f %14.3e\n", static_cast<int>(row[0]), row[1],
                  row[2], row[3], row[4]);
    }
    std::printf("limits: |ratio-phi| = %.3e, |C_n - phi^(-3/2)| = %.3e, "
                "|uncertainty - 1/phi| = %.3e, dX(n+1)/dX(n) -> %.12f\n",
                limits.final_ratio_gap, limits.final_concurrence_gap,
                limits.final_uncertainty_gap, limits.final_dispersion_ratio);
    return kExitOk;
  }

  std::ostringstream body;
  if (args.format == "csv") {
    sf::write_csv(table, body);
  } else {
    sf::write_json(table, body);
  }
  if (args.out.empty()) {
    std::cout << body.str();
  } else {
    write_file(args.out, body.str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supersymmetric coherent state laboratory"};
  app.set_config("--config", "", "configuration file (key=value lines)");
  app.require_subcommand(1);
  app.fallthrough();

  FigureArgs figure_args;
  auto* figure_cmd = app.add_subcommand("figure", "emit figure data (CSV/JSON)");
  figure_cmd->add_option("--id", figure_args.id, "figure id (1..6)")
      ->required()
      ->check(CLI::Range(1, 6));
  figure_cmd->add_option("--out", figure_args.out, "output path");
  figure_cmd->add_option("--format", figure_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  figure_cmd->add_option("--fig1-points", figure_args.grid.fig1_points, "theta samples")
      ->check(CLI::Range(2, 100000));
  figure_cmd->add_option("--grid-c", figure_args.grid.grid_c, "concurrence samples")
      ->check(CLI::Range(2, 100000));
  figure_cmd->add_option("--grid-phi", figure_args.grid.grid_phi, "phase samples")
      ->check(CLI::Range(2, 100000));

  VerifyArgs verify_args;
  std::vector<std::string> tol_entries;
  auto* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
  verify_cmd->add_option("--fock-dim", verify_args.config.fock_dim, "truncation dimension")
      ->check(CLI::Range(8, 4096));
  verify_cmd->add_option("--ortho-dim", verify_args.config.ortho_dim,
                         "dimension for overlap checks")
      ->check(CLI::Range(8, 4096));
  verify_cmd->add_option("--random-states", verify_args.config.random_states,
                         "random states for the statistical identities")
      ->check(CLI::Range(10, 100000));
  verify_cmd->add_option("--seed", verify_args.config.seed, "random seed");
  verify_cmd->add_option("--tol", tol_entries,
                         "tolerance override NAME=VAL (norm_tol, tail_tol, ortho_tol, "
                         "unitary_tol, cmp_tol, eig_tol)");
  verify_cmd->add_option("--out", verify_args.out, "report path (JSON)");

  StateArgs state_args;
  auto* state_cmd = app.add_subcommand("state", "inspect one super-coherent state (JSON)");
  state_cmd->add_option("--label", state_args.label, "Bell label")
      ->required()
      ->check(CLI::IsMember({"Lplus", "Lminus", "Bplus", "Bminus"}));
  state_cmd->add_option("--alpha", state_args.alpha_text, "displacement RE,IM")->required();
  auto* conc_opt =
      state_cmd->add_option("--concurrence", state_args.concurrence, "concurrence C in [0,1]")
          ->check(CLI::Range(0.0, 1.0));
  auto* theta_opt = state_cmd->add_option("--theta", state_args.theta, "Bloch angle in [0,pi]")
                        ->check(CLI::Range(0.0, sf::pi));
  conc_opt->excludes(theta_opt);
  theta_opt->excludes(conc_opt);
  state_cmd->add_option("--phi", state_args.phi, "phase angle (radians)");
  state_cmd->add_option("--fock-dim", state_args.fock_dim, "truncation dimension")
      ->check(CLI::Range(32, 4096));
  state_cmd->add_option("--out", state_args.out, "output path (default stdout)");

  GoldenArgs golden_args;
  auto* golden_cmd = app.add_subcommand("golden", "Fibonacci/Golden uncertainty table");
  golden_cmd->add_option("--n-max", golden_args.n_max, "last sequence index (<= 90)")
      ->check(CLI::Range(1, 1000));
  golden_cmd->add_option("--format", golden_args.format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  golden_cmd->add_option("--out", golden_args.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!tol_entries.empty()) verify_args.config.tol = parse_tolerances(tol_entries);
    if (figure_cmd->parsed()) return run_figure(figure_args);
    if (verify_cmd->parsed()) return run_verify(verify_args);
    if (state_cmd->parsed()) {
      if (!state_args.concurrence && !state_args.theta) {
        std::cerr << "error: state needs --concurrence or --theta\n";
        return kExitUsage;
      }
      return run_state(state_args);
    }
    if (golden_cmd->parsed()) return run_golden(golden_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sf::TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTruncation;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const sf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
