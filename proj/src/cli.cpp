#include "pnt/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "pnt/asymptotics.hpp"
#include "pnt/errors.hpp"

namespace pnt::cli {
namespace {

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

// Rejected configurations; reported with kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void validate(const RunConfig& config) {
  if (config.max_n == 0 || config.max_n > kMaxTableLimit) {
    throw UsageError("--max must be in 1.." + std::to_string(kMaxTableLimit));
  }
  if ((config.command == Command::verify || config.command == Command::pnt) && config.max_n < 10) {
    throw UsageError("--max must be at least 10 for verify and pnt");
  }
  if (config.command == Command::verify && !is_suite(config.suite)) {
    throw UsageError("unknown suite '" + config.suite + "'; valid suites: " + join(suite_names()));
  }
  if (config.command == Command::verify && (config.suite == "chebyshev" || config.suite == "all") &&
      config.max_n < 100'000) {
    throw UsageError("suite '" + config.suite + "' needs --max >= 100000 for the Chebyshev window scan");
  }
  if (config.command == Command::estimate) {
    const auto names = identity_names();
    if (std::find(names.begin(), names.end(), config.identity) == names.end()) {
      throw UsageError("unknown identity '" + config.identity + "'; valid identities: " + join(names));
    }
  }
}

std::shared_ptr<const ChebyshevTables> tables_for(const RunConfig& config) {
  return std::make_shared<const ChebyshevTables>(build_tables(config.max_n));
}

int run_tables(const RunConfig& config, std::ostream& out) {
  const auto tables = tables_for(config);
  out << "n,lambda,psi,theta,pi\n";
  tables->for_each(1, tables->limit(), [&](const PrefixRow& row) {
    out << row.n << ',' << format_number(row.lambda) << ',' << format_number(row.psi) << ','
        << format_number(row.theta) << ',' << row.pi << '\n';
  });
  return kExitOk;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  std::shared_ptr<const ChebyshevTables> tables;
  if (config.suite == "all" || config.suite == "chebyshev" || config.suite == "asymptotics" ||
      config.suite == "selberg") {
    tables = tables_for(config);
  }
  const auto rows = run_suite(config.suite, VerifyOptions{config.max_n, config.seed}, tables);
  write_check_rows(out, rows);
  for (const auto& row : rows) {
    if (!row.pass) return kExitCheckFailed;
  }
  return kExitOk;
}

int run_estimate(const RunConfig& config, std::ostream& out) {
  const auto claim = find_identity(tables_for(config), config.identity);
  const SampleGrid grid{static_cast<std::uint64_t>(std::ceil(claim->threshold)), config.max_n,
                        claim->domain == DomainKind::reals};
  const auto diff = [&](double x) { return claim->lhs(x) - claim->main(x); };
  const ConstantEstimate est = estimate_constant(diff, claim->bound, grid);
  const bool pass = est.constant <= claim->constant;
  out << "identity,constant,witness_x,claimed_constant,threshold,status\n";
  out << claim->name << ',' << format_number(est.constant) << ',' << format_number(est.witness_x) << ','
      << format_number(claim->constant) << ',' << format_number(claim->threshold) << ',' << (pass ? "pass" : "fail")
      << '\n';
  return pass ? kExitOk : kExitCheckFailed;
}

int run_pnt(const RunConfig& config, std::ostream& out) {
  const auto tables = tables_for(config);
  std::vector<double> xs = config.xs;
  if (xs.empty()) {
    for (double x = 10; x <= static_cast<double>(config.max_n); x *= 10) xs.push_back(x);
    if (xs.back() != static_cast<double>(config.max_n)) xs.push_back(static_cast<double>(config.max_n));
  }
  write_pnt_rows(out, pnt_ratio_table(*tables, xs));
  return kExitOk;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_check_rows(std::ostream& out, const std::vector<CheckRow>& rows) {
  out << "suite,check,status,witness_x,observed,threshold\n";
  for (const auto& row : rows) {
    out << row.suite << ',' << row.check << ',' << (row.pass ? "pass" : "fail") << ','
        << (row.witness_x ? format_number(*row.witness_x) : std::string()) << ',' << format_number(row.observed)
        << ',' << format_number(row.threshold) << '\n';
  }
}

void write_pnt_rows(std::ostream& out, const std::vector<PntRow>& rows) {
  out << "x,pi,theta,psi,pi_ratio,theta_ratio,psi_ratio,r_error\n";
  for (const auto& r : rows) {
    out << format_number(r.x) << ',' << r.pi << ',' << format_number(r.theta) << ',' << format_number(r.psi) << ','
        << format_number(r.pi_ratio) << ',' << format_number(r.theta_ratio) << ',' << format_number(r.psi_ratio)
        << ',' << format_number(r.r_error) << '\n';
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    std::ofstream file;
    if (!config.out_path.empty()) {
      file.open(config.out_path, std::ios::binary | std::ios::trunc);
      if (!file) throw UsageError("cannot open output file " + config.out_path);
    }
    std::ostream& sink = config.out_path.empty() ? out : file;
    switch (config.command) {
      case Command::tables:
        return run_tables(config, sink);
      case Command::verify:
        return run_verify(config, sink);
      case Command::estimate:
        return run_estimate(config, sink);
      case Command::pnt:
        return run_pnt(config, sink);
    }
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace pnt::cli
