#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pnt/sieve.hpp"

namespace pnt {

using RealFunction = std::function<double(double)>;

enum class DomainKind { integers, reals };

// |lhs(x) - main(x)| <= constant * |bound(x)| for every x >= threshold in the
// domain. A constant-and-threshold pair is an explicit big-O witness.
struct BigOClaim {
  std::string name;
  RealFunction lhs;
  RealFunction main;
  RealFunction bound;
  double constant = 1.0;
  double threshold = 0.0;
  DomainKind domain = DomainKind::integers;
};

struct BigOReport {
  bool pass = true;
  // Largest observed |lhs - main| / |bound|; +inf when some point has a
  // zero bound with lhs != main, or a non-finite value.
  double sup_ratio = 0.0;
  // First point attaining sup_ratio.
  double witness_x = 0.0;
  std::uint64_t points_checked = 0;
};

// Integer points lo..hi, plus x + 1/2 for lo <= x < hi when midpoints are on
// and the claim ranges over the reals.
struct SampleGrid {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
  bool include_midpoints = false;
};

// Grid points in ascending order, restricted to x >= threshold.
std::vector<double> grid_points(const SampleGrid& grid, DomainKind domain, double threshold = 0.0);

BigOReport check_claim(const BigOClaim& claim, const SampleGrid& grid);

struct ConstantEstimate {
  double constant = 0.0;
  double witness_x = 0.0;
};

// max |f(x)| / |g(x)| over the grid (integer points, plus midpoints when the
// grid asks for them). Throws DomainError if g vanishes on a grid point.
ConstantEstimate estimate_constant(const RealFunction& f, const RealFunction& g, const SampleGrid& grid);

// Stable catalog names.
inline constexpr std::string_view kLn1pRecip = "ln1p_recip";
inline constexpr std::string_view kHarmonicLog = "harmonic_log";
inline constexpr std::string_view kStirlingLogSum = "stirling_log_sum";
inline constexpr std::string_view kLogOverN = "log_over_n";
inline constexpr std::string_view kMertens = "mertens";
inline constexpr std::string_view kEulerGamma = "euler_gamma";

// The elementary asymptotic identities with pinned (constant, threshold).
// Partial sums are tabulated to tables->limit(); evaluating a claim beyond
// that returns NaN, which check_claim reports as a failure.
std::vector<BigOClaim> identity_catalog(std::shared_ptr<const ChebyshevTables> tables);
std::vector<std::string> identity_names();
std::optional<BigOClaim> find_identity(std::shared_ptr<const ChebyshevTables> tables, std::string_view name);

struct InequalityCheck {
  std::string name;
  bool pass = true;
  // Minimum of (right side - left side) over the grid; >= 0 on success.
  double min_slack = std::numeric_limits<double>::infinity();
  double witness_x = 0.0;
  std::uint64_t points_checked = 0;
};

// exp_lower, exp_upper, ln1p_bounds, basel_telescoping, log_power_decay.
std::vector<InequalityCheck> elementary_inequalities(std::uint64_t basel_terms = 1'000'000);

// H(N) - ln N. Requires N >= 10.
double euler_gamma_estimate(std::uint64_t n);

// ln x written as the telescoping sum of ln(1 + 1/n) over n <= x - 1.
double telescoped_log(std::uint64_t x);

// max(0, floor(x)); NaN maps to 0 and values past 2^64 saturate.
std::uint64_t natfloor(double x);

// (n <= floor(x)) == (n <= x).
bool floor_galois_check(std::int64_t n, double x);

// natfloor(|z - 1|) + 1 == natfloor(z). Requires z >= 1.
bool natfloor_shift_check(double z);

}  // namespace pnt
