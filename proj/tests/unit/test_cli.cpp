#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(SUPERFOCK_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof(buffer), pipe)) {
    result.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

fs::path temp_dir() {
  const auto dir = fs::temp_directory_path() / "superfock_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("figure").exit_code == 2);             // missing --id
  CHECK(run_cli("figure --id 7").exit_code == 2);      // out of range
  CHECK(run_cli("bogus").exit_code == 2);              // unknown subcommand
  CHECK(run_cli("state --label Lplus --alpha 0,0").exit_code == 2);  // no C / theta
  CHECK(run_cli("state --label Xminus --alpha 0,0 --concurrence 1").exit_code == 2);
  CHECK(run_cli("golden --n-max 91").exit_code == 2);  // beyond exact integers
}

TEST_CASE("figure emission is deterministic") {
  const auto dir = temp_dir();
  const auto first = dir / "fig6_a.csv";
  const auto second = dir / "fig6_b.csv";
  CHECK(run_cli("figure --id 6 --out " + first.string()).exit_code == 0);
  CHECK(run_cli("figure --id 6 --out " + second.string()).exit_code == 0);
  const std::string a = slurp(first), b = slurp(second);
  CHECK(a == b);
  CHECK(a.find("phi,concurrence,var_x,var_p") == 0);
  CHECK(a.find("0.4375") != std::string::npos);  // squeezed minimum row

  const auto json_path = dir / "fig1.json";
  CHECK(run_cli("figure --id 1 --format json --out " + json_path.string()).exit_code == 0);
  const auto parsed = nlohmann::json::parse(slurp(json_path));
  CHECK(parsed.is_array());
  CHECK(parsed.size() == 181);
  CHECK(parsed[0].contains("concurrence_supernumber"));
  CHECK(parsed[0].contains("concurrence_superqubit"));
}

TEST_CASE("state inspection emits a JSON report") {
  const auto r = run_cli("state --label Lplus --alpha 0,0 --concurrence 1 --phi 0");
  CHECK(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.output);
  CHECK(parsed["concurrence_gram"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(parsed["entropy_bits"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(parsed["mandel_q"].get<double>() == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(parsed["annihilator"]["kind"] == "Am1");
  CHECK(parsed["annihilator"]["eigen_residual"].get<double>() < 1e-8);

  const auto squeezed = run_cli("state --label Lminus --alpha 1,0 --concurrence 0.25 --phi 0");
  CHECK(squeezed.exit_code == 0);
  const auto sq = nlohmann::json::parse(squeezed.output);
  CHECK(sq["quadratures"]["var_x"].get<double>() == doctest::Approx(0.4375).epsilon(1e-7));
  CHECK(sq["quadratures"]["var_p"].get<double>() == doctest::Approx(0.625).epsilon(1e-7));

  // Q = 0 on the unit circle at C = 1
  const auto unit = run_cli("state --label Lplus --alpha 1,0 --concurrence 1 --phi 0");
  const auto uj = nlohmann::json::parse(unit.output);
  CHECK(std::abs(uj["mandel_q"].get<double>()) < 1e-8);

  // vacuum: undefined Mandel Q, no orthogonal partners
  const auto vac = run_cli("state --label Lplus --alpha 0,0 --concurrence 0 --phi 0");
  const auto vj = nlohmann::json::parse(vac.output);
  CHECK(vj["mandel_q"].is_null());
  CHECK(vj["orthogonal_partners"].is_null());

  // theta parametrization: C = sin^2(theta/2)
  const auto theta_run = run_cli("state --label Bplus --alpha 0,0 --theta 1.5707963267948966");
  const auto tj = nlohmann::json::parse(theta_run.output);
  CHECK(tj["concurrence"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("golden table") {
  const auto r = run_cli("golden --n-max 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.625") != std::string::npos);  // n = 5 uncertainty
  CHECK(r.output.find("limits:") != std::string::npos);

  const auto dir = temp_dir();
  const auto csv_path = dir / "golden.csv";
  CHECK(run_cli("golden --n-max 6 --format csv --out " + csv_path.string()).exit_code == 0);
  const auto body = slurp(csv_path);
  CHECK(body.find("n,concurrence,uncertainty,ratio,ratio_gap") == 0);
}

TEST_CASE("starved verification exits with the truncation code") {
  const auto dir = temp_dir();
  const auto report_path = dir / "starved.json";
  const auto r = run_cli("verify --fock-dim 16 --random-states 20 --out " + report_path.string());
  CHECK(r.exit_code == 3);
  const auto parsed = nlohmann::json::parse(slurp(report_path));
  CHECK(parsed["all_pass"] == false);
  int truncation_failures = 0;
  for (const auto& c : parsed["checks"]) {
    if (!c["pass"].get<bool>()) {
      CHECK(c["category"] == "truncation");
      ++truncation_failures;
    }
  }
  CHECK(truncation_failures > 0);
  CHECK(parsed["flags"].size() == 2);
  CHECK(parsed["flags"][0]["id"] == "matrix_element_D11");
}

TEST_CASE("output directory honours the environment variable") {
  const auto dir = temp_dir() / "envout";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string command = "SUPERFOCK_OUTPUT_DIR=" + dir.string() + " " +
                              std::string(SUPERFOCK_CLI_PATH) +
                              " figure --id 4 --grid-c 5 --grid-phi 5";
  CHECK(std::system(command.c_str()) == 0);
  CHECK(fs::exists(dir / "figure_4.csv"));
}

TEST_SUITE_END();
