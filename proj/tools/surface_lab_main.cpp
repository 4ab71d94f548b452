#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "surface_lab/errors.hpp"
#include "surface_lab/verify.hpp"

namespace {

constexpr int kUsageError = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace surface_lab;

  CLI::App app{"surface-lab: verification suite for the Inoue surfaces with K^2 = 7"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "run named checks (default: all)");
  std::vector<std::string> checks;
  std::vector<std::string> taus;
  RunConfig config;
  std::string format = "text";
  bool list = false;
  bool no_default_tau = false;

  verify->add_option("checks", checks, "check names, or 'all'");
  verify->add_option("--tau", taus, "modulus RE+IMi for the numeric checks (repeatable)");
  verify->add_option("--eps", config.eps, "numeric tolerance")->capture_default_str();
  verify->add_option("--samples", config.samples, "sample points per modulus")->capture_default_str();
  verify->add_option("--seed", config.seed, "sampling seed")->capture_default_str();
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify->add_flag("--list", list, "list the available checks and exit");
  verify->add_flag("--no-default-tau", no_default_tau,
                   "skip numeric checks unless --tau is given");
  verify->add_flag("--timing", config.timing, "include elapsed_ms in JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (list) {
    for (const auto& c : list_checks())
      std::cout << c.name << (c.numeric ? " [numeric]" : "") << "  " << c.anchor << "\n";
    return 0;
  }

  try {
    if (!checks.empty()) config.checks = checks;
    for (const auto& t : taus) config.taus.push_back(parse_tau(t));
    config.default_taus = !no_default_tau;
    config.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;

    const auto results = run(config);
    std::cout << (config.format == OutputFormat::kJson ? render_json(config, results)
                                                       : render_text(results));
    return exit_code(results);
  } catch (const UnknownCheck& e) {
    std::cerr << "surface-lab: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidArgument& e) {
    std::cerr << "surface-lab: " << e.what() << "\n";
    return kUsageError;
  }
}
