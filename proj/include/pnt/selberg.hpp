#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pnt/asymptotics.hpp"
#include "pnt/sieve.hpp"

namespace pnt {

// sup over integers x in [2, 1e5] of |selberg_lhs(x) - 2 x ln x| / x,
// attained at x = 190. Pinned by tests/oracles/pinned_values.py.
inline constexpr double kSelbergConstant = 3.207003124685548;

// Constant for |R(x)| ln^2 x - 2 sum_{n<=x} |R(x/n)| ln n <= C x ln x.
// Over every integer in [2, 1e4] the left side is already negative (the
// largest normalized value is -0.547079326399155 at x = 2), so the
// inequality holds with C = 0.
inline constexpr double kErrorInequalityConstant = 0.0;
inline constexpr double kErrorInequalitySup = -0.547079326399155;

// Prefix sums of Lambda(n) ln n + sum_{d|n} Lambda(d) Lambda(n/d) for n up
// to a limit. The convolution is evaluated by divisor enumeration per n.
class SelbergSums {
 public:
  SelbergSums(const ChebyshevTables& tables, std::uint64_t limit);

  std::uint64_t limit() const { return prefix_.size() - 1; }
  // Floor convention; rejects x > limit.
  double lhs(double x) const;

 private:
  std::vector<double> prefix_;
};

// sum_{n<=x} Lambda(n) ln n + sum_{n<=x} sum_{d|n} Lambda(d) Lambda(n/d).
double selberg_lhs(double x, const ChebyshevTables& t);

// |selberg_lhs(x) - 2 x ln x| <= constant * x over the grid (grid.lo >= 2).
BigOReport selberg_check(const ChebyshevTables& t, const SampleGrid& grid, double constant = kSelbergConstant);

// (|R(x)| ln^2 x - 2 sum_{n<=x} |R(x/n)| ln n) / (x ln x), for 2 <= x <= N.
double error_inequality_ratio(std::uint64_t x, const ChebyshevTables& t);

// One-sided check of error_inequality_ratio(x) <= constant at every x in xs.
// sup_ratio is the signed maximum.
BigOReport r_inequality_check(const ChebyshevTables& t, std::span<const std::uint64_t> xs,
                              double constant = kErrorInequalityConstant);

struct IterationTrace {
  double k = 0.0;
  // a_1, ..., a_steps.
  std::vector<double> values;
};

// a_{n+1} = a_n - k a_n^3. Requires a1 > 0, k > 0, k a1^2 < 1, steps >= 1.
IterationTrace iterate_bound(double a1, double k, std::size_t steps);

// 1 / sqrt(1/a1^2 + 2k(n-1)), an upper bound on a_n.
double iteration_envelope(double a1, double k, std::size_t n);

struct PntRow {
  double x = 0.0;
  std::uint64_t pi = 0;
  double theta = 0.0;
  double psi = 0.0;
  double pi_ratio = 0.0;     // pi(x) ln x / x
  double theta_ratio = 0.0;  // theta(x) / x
  double psi_ratio = 0.0;    // psi(x) / x
  double r_error = 0.0;      // psi(x) - x
};

// Requires every x in [2, t.limit()].
std::vector<PntRow> pnt_ratio_table(const ChebyshevTables& t, std::span<const double> xs);

}  // namespace pnt
