#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pnt/sieve.hpp"

namespace pnt {

// One verified property. Exact checks report a mismatch count as `observed`
// against a threshold of 0; bound checks report the measured quantity.
struct CheckRow {
  std::string suite;
  std::string check;
  bool pass = true;
  std::optional<double> witness_x;
  double observed = 0.0;
  double threshold = 0.0;
};

struct VerifyOptions {
  std::uint64_t max_n = 1'000'000;
  std::uint64_t seed = 0;
};

// moebius, combinatorics, chebyshev, inequalities, asymptotics, selberg,
// iteration, all.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

// Runs one suite (or every suite for "all"). `tables` must cover
// options.max_n. Throws DomainError for unknown suites.
std::vector<CheckRow> run_suite(std::string_view name, const VerifyOptions& options,
                                std::shared_ptr<const ChebyshevTables> tables);

// Individual suites.
std::vector<CheckRow> verify_moebius(const VerifyOptions& options);
std::vector<CheckRow> verify_combinatorics(const VerifyOptions& options);
std::vector<CheckRow> verify_chebyshev(const VerifyOptions& options, const ChebyshevTables& tables);
std::vector<CheckRow> verify_inequalities(const VerifyOptions& options);
std::vector<CheckRow> verify_asymptotics(const VerifyOptions& options, std::shared_ptr<const ChebyshevTables> tables);
std::vector<CheckRow> verify_selberg(const VerifyOptions& options, const ChebyshevTables& tables);
std::vector<CheckRow> verify_iteration(const VerifyOptions& options);

// 200 seed-determined sample points in [2, hi] for the error inequality.
std::vector<std::uint64_t> error_inequality_samples(std::uint64_t seed, std::uint64_t hi, std::size_t count = 200);

// Brute-force Selberg left side for every integer 0..x: trial-division
// Lambda and a divisibility scan over every d <= n.
std::vector<double> selberg_lhs_bruteforce(std::uint64_t x);

}  // namespace pnt
