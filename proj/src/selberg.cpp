#include "pnt/selberg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pnt/errors.hpp"
#include "pnt/summation.hpp"

namespace pnt {
namespace {

std::vector<double> lambda_values(const ChebyshevTables& t, std::uint64_t limit) {
  std::vector<double> lam(limit + 1, 0.0);
  t.for_each(1, limit, [&](const PrefixRow& row) { lam[row.n] = row.lambda; });
  return lam;
}

std::vector<double> psi_values(const ChebyshevTables& t, std::uint64_t limit) {
  std::vector<double> psi(limit + 1, 0.0);
  t.for_each(1, limit, [&](const PrefixRow& row) { psi[row.n] = row.psi; });
  return psi;
}

double error_ratio(std::uint64_t x, std::span<const double> psi) {
  const double xd = static_cast<double>(x);
  const double log_x = std::log(xd);
  CompensatedSum tail;
  for (std::uint64_t n = 2; n <= x; ++n) {
    const double y = xd / static_cast<double>(n);
    tail.add(std::fabs(psi[x / n] - y) * std::log(static_cast<double>(n)));
  }
  const double head = std::fabs(psi[x] - xd) * log_x * log_x;
  return (head - 2 * tail.value()) / (xd * log_x);
}

}  // namespace

SelbergSums::SelbergSums(const ChebyshevTables& tables, std::uint64_t limit) {
  if (limit == 0 || limit > tables.limit()) {
    throw DomainError("SelbergSums: limit " + std::to_string(limit) + " outside 1.." + std::to_string(tables.limit()));
  }
  if (limit > 0xffffffffu) throw DomainError("SelbergSums: limit exceeds 32-bit range");
  const std::vector<double> lam = lambda_values(tables, limit);
  const SmallestPrimeFactorTable spf(static_cast<std::uint32_t>(limit));

  prefix_.assign(limit + 1, 0.0);
  CompensatedSum acc;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    double term = lam[n] * std::log(static_cast<double>(n));
    for (std::uint64_t d : spf.divisors(static_cast<std::uint32_t>(n))) term += lam[d] * lam[n / d];
    acc.add(term);
    prefix_[n] = acc.value();
  }
}

double SelbergSums::lhs(double x) const {
  if (std::isnan(x) || x > static_cast<double>(limit())) {
    throw DomainError("SelbergSums: x=" + std::to_string(x) + " exceeds limit " + std::to_string(limit()));
  }
  return prefix_[natfloor(x)];
}

double selberg_lhs(double x, const ChebyshevTables& t) {
  if (!(x >= 1.0) || x > static_cast<double>(t.limit())) {
    throw DomainError("selberg_lhs: x=" + std::to_string(x) + " outside [1, " + std::to_string(t.limit()) + "]");
  }
  const std::uint64_t n = natfloor(x);
  return SelbergSums(t, n).lhs(static_cast<double>(n));
}

BigOReport selberg_check(const ChebyshevTables& t, const SampleGrid& grid, double constant) {
  if (grid.lo < 2 || grid.hi < grid.lo || grid.hi > t.limit()) {
    throw DomainError("selberg_check: grid must lie within [2, " + std::to_string(t.limit()) + "]");
  }
  auto sums = std::make_shared<const SelbergSums>(t, grid.hi);
  BigOClaim claim{"selberg_symmetry",
                  [sums](double x) { return sums->lhs(x); },
                  [](double x) { return 2 * x * std::log(x); },
                  [](double x) { return x; },
                  constant,
                  2.0,
                  DomainKind::reals};
  return check_claim(claim, grid);
}

double error_inequality_ratio(std::uint64_t x, const ChebyshevTables& t) {
  if (x < 2 || x > t.limit()) {
    throw DomainError("error_inequality_ratio: x=" + std::to_string(x) + " outside [2, " +
                      std::to_string(t.limit()) + "]");
  }
  return error_ratio(x, psi_values(t, x));
}

BigOReport r_inequality_check(const ChebyshevTables& t, std::span<const std::uint64_t> xs, double constant) {
  if (xs.empty()) throw DomainError("r_inequality_check: no sample points");
  for (std::uint64_t x : xs) {
    if (x < 2 || x > t.limit()) {
      throw DomainError("r_inequality_check: x=" + std::to_string(x) + " outside [2, " + std::to_string(t.limit()) +
                        "]");
    }
  }
  const std::vector<double> psi = psi_values(t, *std::max_element(xs.begin(), xs.end()));
  BigOReport report;
  report.sup_ratio = -std::numeric_limits<double>::infinity();
  for (std::uint64_t x : xs) {
    const double ratio = error_ratio(x, psi);
    ++report.points_checked;
    if (ratio > report.sup_ratio || std::isnan(ratio)) {
      report.sup_ratio = std::isnan(ratio) ? std::numeric_limits<double>::infinity() : ratio;
      report.witness_x = static_cast<double>(x);
    }
  }
  report.pass = report.sup_ratio <= constant;
  return report;
}

IterationTrace iterate_bound(double a1, double k, std::size_t steps) {
  if (!(a1 > 0.0) || !(k > 0.0) || !(k * a1 * a1 < 1.0) || steps == 0) {
    throw DomainError("iterate_bound: need a1 > 0, k > 0, k a1^2 < 1 and steps >= 1 (a1=" + std::to_string(a1) +
                      ", k=" + std::to_string(k) + ")");
  }
  IterationTrace trace{k, {}};
  trace.values.reserve(steps);
  double a = a1;
  trace.values.push_back(a);
  while (trace.values.size() < steps) {
    a = a - k * a * a * a;
    trace.values.push_back(a);
  }
  return trace;
}

double iteration_envelope(double a1, double k, std::size_t n) {
  return 1.0 / std::sqrt(1.0 / (a1 * a1) + 2 * k * static_cast<double>(n - 1));
}

std::vector<PntRow> pnt_ratio_table(const ChebyshevTables& t, std::span<const double> xs) {
  std::vector<PntRow> rows;
  rows.reserve(xs.size());
  for (double x : xs) {
    if (!(x >= 2.0) || x > static_cast<double>(t.limit())) {
      throw DomainError("pnt_ratio_table: x=" + std::to_string(x) + " outside [2, " + std::to_string(t.limit()) +
                        "]");
    }
    PntRow row;
    row.x = x;
    row.pi = t.pi(x);
    row.theta = t.theta(x);
    row.psi = t.psi(x);
    row.pi_ratio = static_cast<double>(row.pi) * std::log(x) / x;
    row.theta_ratio = row.theta / x;
    row.psi_ratio = row.psi / x;
    row.r_error = row.psi - x;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace pnt
