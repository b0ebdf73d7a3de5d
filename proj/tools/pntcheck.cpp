// pntcheck: tables, verification suites, constant estimates and the prime
// number theorem ratio table, all as CSV.
//
//   pntcheck tables   --max N [--out PATH]
//   pntcheck verify   --suite NAME [--max N] [--seed S] [--out PATH]
//   pntcheck estimate --identity NAME [--max N] [--out PATH]
//   pntcheck pnt      [--max N] [--x X ...] [--out PATH]
//
// Exit status: 0 all checks pass, 1 a check failed, 2 usage error.

#include <iostream>

#include "CLI11.hpp"
#include "pnt/cli.hpp"

int main(int argc, char** argv) {
  using pnt::cli::Command;
  pnt::cli::RunConfig config;

  CLI::App app{"Numerical checks of the elementary prime number theorem pipeline"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max", config.max_n, "Table limit N")->capture_default_str();
    sub->add_option("--out", config.out_path, "Write CSV to PATH instead of standard output");
  };

  auto* tables = app.add_subcommand("tables", "Emit n, Lambda(n), psi(n), theta(n), pi(n) for n <= N");
  add_common(tables);

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  add_common(verify);
  verify->add_option("--suite", config.suite, "moebius|combinatorics|chebyshev|inequalities|asymptotics|selberg|"
                                              "iteration|all")
      ->capture_default_str();
  verify->add_option("--seed", config.seed, "Seed for randomized properties")->capture_default_str();

  auto* estimate = app.add_subcommand("estimate", "Estimate the big-O constant of a catalog identity");
  add_common(estimate);
  estimate->add_option("--identity", config.identity, "Catalog identity name")->required();

  auto* pnt = app.add_subcommand("pnt", "Ratios pi(x) ln x / x, theta(x)/x, psi(x)/x");
  add_common(pnt);
  pnt->add_option("--x", config.xs, "Sample points (default: decades up to N, and N)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return pnt::cli::kExitUsage;
  }

  if (tables->parsed()) config.command = Command::tables;
  if (verify->parsed()) config.command = Command::verify;
  if (estimate->parsed()) config.command = Command::estimate;
  if (pnt->parsed()) config.command = Command::pnt;

  return pnt::cli::run(config, std::cout, std::cerr);
}
