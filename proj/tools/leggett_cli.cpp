// leggett_cli.cpp
// Command-line front end: quantum sweeps, single bound checks, hidden
// variable model simulation, and the built-in verification suite.
//
// Exit codes: 0 when every report satisfies the bounds (resp. every
// verification check passes), 1 when any is violated, 2 on input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leggett/leggett.hpp"

namespace {

struct OutputTarget {
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file = std::make_unique<std::ofstream>(path);
      if (!*file) throw leggett::DomainError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file ? *file : std::cout; }
  std::unique_ptr<std::ofstream> file;
};

bool all_rows_satisfied(const std::vector<leggett::SweepRow>& rows) {
  for (const leggett::SweepRow& row : rows)
    if (!row.report_paper.satisfied || !row.report_oracle.satisfied) return false;
  return true;
}

int emit_rows(const std::vector<leggett::SweepRow>& rows, const std::string& format,
              const std::string& output) {
  OutputTarget target(output);
  if (format == "json")
    leggett::write_json(target.stream(), rows);
  else
    leggett::write_csv(target.stream(), rows);
  return all_rows_satisfied(rows) ? 0 : 1;
}

int run_sweep(const std::string& state, std::size_t grid, double base, const std::string& format,
              const std::string& output) {
  static const std::map<std::string, leggett::CanonicalState> kStates = {
      {"psi-plus", leggett::CanonicalState::PsiPlus},
      {"psi-minus", leggett::CanonicalState::PsiMinus},
      {"singlet", leggett::CanonicalState::Singlet}};
  return emit_rows(leggett::quantum_sweep(kStates.at(state), grid, base), format, output);
}

int run_check(double av_a, double av_b, double av_ab, double tolerance,
              const std::string& format, const std::string& output) {
  const leggett::InequalityReport report =
      leggett::leggett_check({av_a, av_b, av_ab}, tolerance);
  OutputTarget target(output);
  if (format == "csv") {
    target.stream() << leggett::kCheckCsvHeader << '\n'
                    << leggett::to_csv_line(report, av_a, av_b) << '\n';
  } else {
    nlohmann::json arr = nlohmann::json::array();
    arr.push_back(leggett::to_json(report, av_a, av_b));
    target.stream() << arr.dump(2) << '\n';
  }
  return report.satisfied ? 0 : 1;
}

int run_hvt(double u, double v, std::size_t grid, std::int64_t samples, std::uint64_t seed,
            const std::string& format, const std::string& output) {
  const leggett::MalusProductModel model = leggett::malus_product_model(u, v);
  return emit_rows(leggett::malus_sweep(model, grid, samples, seed), format, output);
}

int run_verify(const std::string& format, const std::string& output) {
  const std::vector<leggett::VerificationCheck> checks = leggett::run_verification();
  OutputTarget target(output);
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const leggett::VerificationCheck& c : checks)
      arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    target.stream() << arr.dump(2) << '\n';
  } else {
    std::size_t passed = 0;
    for (const leggett::VerificationCheck& c : checks) {
      target.stream() << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
      if (c.passed) ++passed;
    }
    target.stream() << passed << "/" << checks.size() << " checks passed\n";
  }
  return leggett::all_passed(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entangled-pair correlations against the Leggett bounds"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string output;
  bool degrees = false;

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Sweep the relative analyzer angle for a canonical entangled state");
  std::string state = "psi-plus";
  std::size_t grid = 360;
  double base = 0.0;
  sweep->add_option("--state", state, "Entangled state to sweep")
      ->check(CLI::IsMember({"psi-plus", "psi-minus", "singlet"}));
  sweep->add_option("--grid", grid, "Number of delta grid points over [0, 2*pi)");
  sweep->add_option("--base", base, "Absolute angle of the second analyzer");
  sweep->add_flag("--degrees", degrees, "Interpret angle options as degrees");
  sweep->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--output", output, "Write rows to this file instead of stdout");

  CLI::App* check = app.add_subcommand("check", "Check one average triple against the bounds");
  double av_a = 0.0;
  double av_b = 0.0;
  double av_ab = 0.0;
  double tolerance = leggett::kDefaultTolerance;
  check->add_option("--av-a", av_a, "Average of A")->required();
  check->add_option("--av-b", av_b, "Average of B")->required();
  check->add_option("--av-ab", av_ab, "Average of the product AB")->required();
  check->add_option("--tolerance", tolerance, "Satisfaction tolerance");
  std::string check_format = "json";
  check->add_option("--format", check_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  check->add_option("--output", output, "Write the report to this file instead of stdout");

  CLI::App* hvt = app.add_subcommand(
      "hvt", "Monte Carlo sweep of a built-in hidden-variable model");
  std::string model = "malus";
  double u = 0.0;
  double v = 0.0;
  std::int64_t samples = 100000;
  std::uint64_t seed = 42;
  hvt->add_option("--model", model, "Built-in model name")->check(CLI::IsMember({"malus"}));
  hvt->add_option("--u", u, "Polarization angle of side A");
  hvt->add_option("--v", v, "Polarization angle of side B");
  hvt->add_option("--grid", grid, "Number of delta grid points over [0, 2*pi)");
  hvt->add_option("--samples", samples, "Monte Carlo samples per grid point");
  hvt->add_option("--seed", seed, "Base seed for the per-row substreams");
  hvt->add_flag("--degrees", degrees, "Interpret angle options as degrees");
  hvt->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  hvt->add_option("--output", output, "Write rows to this file instead of stdout");

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the exact-identity verification suite and print a summary");
  std::string verify_format = "text";
  verify->add_option("--format", verify_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--output", output, "Write the summary to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  const double to_radians = degrees ? std::numbers::pi / 180.0 : 1.0;
  try {
    if (sweep->parsed()) return run_sweep(state, grid, base * to_radians, format, output);
    if (check->parsed()) return run_check(av_a, av_b, av_ab, tolerance, check_format, output);
    if (hvt->parsed())
      return run_hvt(u * to_radians, v * to_radians, grid, samples, seed, format, output);
    return run_verify(verify_format, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
